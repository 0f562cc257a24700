#include "cr/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "cr/errors.hpp"
#include "cr/numtheory.hpp"

namespace cr {

namespace {

double log_of(const Integer& v) {
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp) * std::log(2.0);
}

double log_of(const Rational& v) { return log_of(v.get_num()) - log_of(v.get_den()); }

double to_double(const Integer& v) { return v.get_d(); }

// True when (value, fraction) should replace (best, best_fraction) in a
// minimum; ties resolve to the smaller fraction.
bool better_min(double value, const ReducedFraction& fraction, double best, const ReducedFraction& best_fraction) {
  return value < best || (value == best && fraction < best_fraction);
}

bool better_max(double value, const ReducedFraction& fraction, double best, const ReducedFraction& best_fraction) {
  return value > best || (value == best && fraction < best_fraction);
}

ConstantSummary single(const BoundReport& r) {
  ConstantSummary s;
  s.count = 1;
  s.k_emp_min = r.k_emp;
  s.c_emp_rad_min = r.c_emp_rad;
  s.c_emp_p_min = r.c_emp_p;
  s.log_ratio_max = r.log_ratio;
  s.k_emp_argmin = s.c_emp_rad_argmin = s.c_emp_p_argmin = s.log_ratio_argmax = r.fraction;
  return s;
}

}  // namespace

std::string_view to_string(Branch branch) {
  return branch == Branch::kPrimeAboveBase ? "P>b" : "P<b";
}

std::optional<BoundReport> bound_report(const Integer& base, const Rational& epsilon, const ReducedFraction& x) {
  if (base < 2) {
    throw PreconditionError("base must be >= 2, got " + base.get_str());
  }
  if (epsilon <= 0) {
    throw PreconditionError("epsilon must be > 0");
  }
  const Integer& d = x.den();
  if (gcd(Integer(x.num() * base), d) != 1) {
    throw PreconditionError("bound reports need gcd(a b, d) = 1; got " + x.str() + " with b = " + base.get_str());
  }
  // eps d >= 3 keeps log log(2 eps d) positive; d >= 3 does the same for
  // log log d.
  if (epsilon * d < 3 || d < 3) {
    return std::nullopt;
  }
  const Factorization f = factorize(d);

  BoundReport r;
  r.fraction = x;
  r.base = base;
  r.epsilon = epsilon;
  r.largest_prime = f.largest_prime();
  r.radical = f.radical();
  r.branch = r.largest_prime > base ? Branch::kPrimeAboveBase : Branch::kPrimeBelowBase;

  const double P = to_double(r.largest_prime);
  const double log_b = log_of(base);
  const double log_2ed = log_of(Rational(2 * epsilon * d));
  const double log_d = log_of(d);
  r.lhs = P;
  r.rhs = r.branch == Branch::kPrimeAboveBase ? std::sqrt(log_2ed * std::log(log_2ed) / log_b)
                                              : std::sqrt(log_2ed / log_b);
  r.k_emp = P / r.rhs;
  r.c_emp_rad = to_double(r.radical) / log_d;
  r.c_emp_p = P / std::sqrt(log_d * std::log(log_d));
  r.log_ratio = log_2ed * std::log(P) / (P * P * log_b);
  return r;
}

ConstantSummary merge(const ConstantSummary& a, const ConstantSummary& b) {
  if (a.count == 0) {
    return b;
  }
  if (b.count == 0) {
    return a;
  }
  ConstantSummary out = a;
  out.count = a.count + b.count;
  if (better_min(b.k_emp_min, b.k_emp_argmin, a.k_emp_min, a.k_emp_argmin)) {
    out.k_emp_min = b.k_emp_min;
    out.k_emp_argmin = b.k_emp_argmin;
  }
  if (better_min(b.c_emp_rad_min, b.c_emp_rad_argmin, a.c_emp_rad_min, a.c_emp_rad_argmin)) {
    out.c_emp_rad_min = b.c_emp_rad_min;
    out.c_emp_rad_argmin = b.c_emp_rad_argmin;
  }
  if (better_min(b.c_emp_p_min, b.c_emp_p_argmin, a.c_emp_p_min, a.c_emp_p_argmin)) {
    out.c_emp_p_min = b.c_emp_p_min;
    out.c_emp_p_argmin = b.c_emp_p_argmin;
  }
  if (better_max(b.log_ratio_max, b.log_ratio_argmax, a.log_ratio_max, a.log_ratio_argmax)) {
    out.log_ratio_max = b.log_ratio_max;
    out.log_ratio_argmax = b.log_ratio_argmax;
  }
  return out;
}

ConstantSummary aggregate_constants(std::span<const BoundReport> reports) {
  if (reports.empty()) {
    throw PreconditionError("cannot aggregate an empty report list");
  }
  ConstantSummary out;
  for (const auto& r : reports) {
    out = merge(out, single(r));
  }
  return out;
}

ThresholdCheck threshold_bounds_check(const OrderProfile& profile) {
  const double log_b = log_of(profile.base());
  ThresholdCheck out;
  for (const auto& rec : profile.records()) {
    const double p = to_double(rec.prime);
    const double log_p = std::log(p);
    ThresholdSlack row;
    row.prime = rec.prime;
    row.n = rec.n;
    row.N = rec.N;
    row.n_bound = std::max(3.0, 2.0 * p * log_b / log_p);
    double widest = 0;
    for (const auto& q : profile.records()) {
      widest = std::max(widest, static_cast<double>(q.n) * std::log(to_double(q.prime)) / log_p);
    }
    row.N_bound = static_cast<double>(rec.n) + widest;
    row.n_slack = row.n_bound - static_cast<double>(row.n);
    row.N_slack = row.N_bound - static_cast<double>(row.N);
    const double tol_n = kLogTolerance * std::max(1.0, row.n_bound);
    const double tol_N = kLogTolerance * std::max(1.0, row.N_bound);
    if (row.n_slack < -tol_n || row.N_slack < -tol_N) {
      out.pass = false;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace cr
