#include "cr/serialize.hpp"

#include <cstdio>
#include <cstdlib>

namespace cr {

Json to_json(const Integer& v) {
  if (fits_u64(v)) {
    return Json(to_u64(v));
  }
  if (v < 0 && mpz_fits_slong_p(v.get_mpz_t())) {
    return Json(v.get_si());
  }
  return Json(v.get_str());
}

Json to_json(const Rational& v) { return Json(to_string(v)); }

Json to_json(const ReducedFraction& x) { return Json(x.str()); }

Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& [p, e] : f.factors()) {
    factors.push_back({{"prime", to_json(p)}, {"exponent", e}});
  }
  return {{"value", to_json(f.value())}, {"factors", factors}};
}

Json to_json(const OrderProfile& profile) {
  Json primes = Json::array();
  Json per_prime = Json::object();
  for (const auto& r : profile.records()) {
    primes.push_back(to_json(r.prime));
    per_prime[r.prime.get_str()] = {{"n", r.n}, {"N", r.N}, {"ord", to_json(r.order)}};
  }
  return {{"base", to_json(profile.base())}, {"primes", primes}, {"per_prime", per_prime}};
}

Json to_json(const DenominatorSplit& split) {
  return {{"d", to_json(split.d)}, {"d0", to_json(split.d0)}, {"d1", to_json(split.d1)}};
}

namespace {

Json fraction_list(std::span<const ReducedFraction> xs) {
  Json out = Json::array();
  for (const auto& x : xs) {
    out.push_back(x.str());
  }
  return out;
}

Json digit_list(std::span<const unsigned> digits) {
  Json out = Json::array();
  for (unsigned d : digits) {
    out.push_back(d);
  }
  return out;
}

}  // namespace

Json to_json(const Orbit& orbit) {
  return {{"points", fraction_list(orbit.points)},
          {"size", orbit.points.size()},
          {"preperiod", orbit.preperiod},
          {"period", orbit.period}};
}

Json to_json(const OrbitDecomposition& dec) {
  return {{"base", to_json(dec.base)},
          {"fraction", dec.fraction.str()},
          {"d0", to_json(dec.split.d0)},
          {"d1", to_json(dec.split.d1)},
          {"order", to_json(dec.order)},
          {"order_d1", to_json(dec.order_d1)},
          {"a1", fraction_list(dec.a1)},
          {"a2", fraction_list(dec.a2)},
          {"a1_equals_a2", dec.sets_equal}};
}

Json to_json(const DensityReport& report) {
  return {{"points", fraction_list(report.points)},
          {"cover_radius", to_json(report.cover_radius)},
          {"epsilon", to_json(report.epsilon)},
          {"is_dense", report.is_dense}};
}

Json to_json(const Expansion& e) { return {{"preperiod", digit_list(e.preperiod)}, {"period", digit_list(e.period)}}; }

Json to_json(const DigitSet& ds) {
  return {{"base", ds.base()},
          {"digits", digit_list(ds.digits())},
          {"longest_missing_run", ds.longest_missing_run()},
          {"epsilon_claimed", to_json(ds.epsilon_claimed())},
          {"epsilon_exact", to_json(ds.epsilon_exact())},
          {"gap_radius", to_json(ds.gap_radius())},
          {"epsilon_discrepancy", ds.epsilon_claimed() != ds.epsilon_exact()}};
}

Json to_json(const MemberCounts& c) {
  return {{"T", c.max_denominator},
          {"coprime_to_base_only", c.coprime_to_base_only},
          {"count_reduced", c.reduced},
          {"count_reduced_without_endpoints", c.reduced_without_endpoints},
          {"count_all", c.all},
          {"count_all_without_endpoints", c.all_without_endpoints}};
}

Json to_json(const SIntegerCertificate& cert) {
  Json primes = Json::array();
  for (const auto& p : cert.primes) {
    primes.push_back(to_json(p));
  }
  Json members = Json::array();
  for (const auto& x : cert.members) {
    members.push_back({{"fraction", x.str()}, {"endpoint", x.is_zero() || x.is_one()}});
  }
  return {{"base", cert.base},
          {"digits", digit_list(cert.digits)},
          {"primes", primes},
          {"epsilon", to_json(cert.epsilon)},
          {"gap_radius", to_json(cert.gap_radius)},
          {"D", to_json(cert.bound)},
          {"max_denominator", to_json(cert.max_denominator)},
          {"denominators_checked", cert.denominators_checked},
          {"members", members},
          {"count_including_endpoints", cert.count_with_endpoints},
          {"count_excluding_endpoints", cert.count_without_endpoints},
          {"claim", "every reduced S-integer in C with denominator > D has an orbit of circular spacing < 2*epsilon, "
                    "which a gap of C of width 2*gap_radius >= 2*epsilon forbids"}};
}

Json to_json(const ConstantSummary& s) {
  return {{"count", s.count},
          {"log", "natural"},
          {"K_emp_min", s.k_emp_min},
          {"K_emp_argmin", s.k_emp_argmin.str()},
          {"c_emp_rad_min", s.c_emp_rad_min},
          {"c_emp_rad_argmin", s.c_emp_rad_argmin.str()},
          {"c_emp_P_min", s.c_emp_p_min},
          {"c_emp_P_argmin", s.c_emp_p_argmin.str()},
          {"log_ratio_max", s.log_ratio_max},
          {"log_ratio_argmax", s.log_ratio_argmax.str()}};
}

Json to_json(const ThresholdCheck& check) {
  Json rows = Json::array();
  for (const auto& r : check.rows) {
    rows.push_back({{"prime", to_json(r.prime)},
                    {"n", r.n},
                    {"n_bound", r.n_bound},
                    {"n_slack", r.n_slack},
                    {"N", r.N},
                    {"N_bound", r.N_bound},
                    {"N_slack", r.N_slack}});
  }
  return {{"pass", check.pass}, {"rows", rows}};
}

Json member_record(unsigned base, const ReducedFraction& x) {
  Json out = {{"num", to_json(x.num())}, {"den", to_json(x.den())}};
  if (x.is_one()) {
    out["preperiod"] = Json::array();
    out["period"] = Json::array({base - 1});
    return out;
  }
  const Expansion e = expand(base, x);
  out["preperiod"] = digit_list(e.preperiod);
  out["period"] = digit_list(e.period);
  return out;
}

std::string counts_csv(const MemberCounts& c, bool header) {
  std::string out;
  if (header) {
    out += "T,count_reduced,count_all,includes_endpoints\n";
  }
  const std::string t = std::to_string(c.max_denominator);
  out += t + "," + std::to_string(c.reduced) + "," + std::to_string(c.all) + ",true\n";
  out += t + "," + std::to_string(c.reduced_without_endpoints) + "," + std::to_string(c.all_without_endpoints) +
         ",false\n";
  return out;
}

std::string format_double(double v) {
  char buf[64];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) {
      break;
    }
  }
  return buf;
}

std::string bound_csv_header() { return "b,digits,a,d,P,rad,branch,K_emp,c_emp_rad,c_emp_P"; }

std::string bound_csv_row(const DigitSet& ds, const BoundReport& r) {
  std::string out = std::to_string(ds.base()) + ",\"" + ds.digits_str() + "\"," + r.fraction.num().get_str() + "," +
                    r.fraction.den().get_str() + "," + r.largest_prime.get_str() + "," + r.radical.get_str() + "," +
                    std::string(to_string(r.branch)) + "," + format_double(r.k_emp) + "," +
                    format_double(r.c_emp_rad) + "," + format_double(r.c_emp_p);
  return out;
}

}  // namespace cr
