#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <thread>

#include "cr/cr.hpp"

namespace cr::cli {
namespace {

constexpr std::uint64_t kBruteForceLimit = 1000000;

struct Options {
  std::string format = "json";
  unsigned threads = 1;

  std::string base;
  std::string modulus;
  std::string frac;
  std::string epsilon;
  std::vector<std::string> primes;
  std::vector<unsigned long> exponents;
  std::vector<unsigned> digits;
  std::vector<std::string> denominators;
  std::string den_form;
  unsigned min_exp = 1;
  unsigned max_exp = 0;
  std::uint64_t max_den = 0;
  bool decompose = false;
  bool reduced = false;
  bool coprime = false;
  std::string endpoints = "exclude";
  std::uint64_t trials = 200;
  std::uint64_t seed = 1;
};

unsigned default_threads() {
  if (const char* env = std::getenv("CR_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0 || v > 1024) {
      throw PreconditionError(std::string("CR_THREADS must be an integer in [1, 1024], got '") + env + "'");
    }
    return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<Integer> parse_primes(const std::vector<std::string>& texts) {
  std::vector<Integer> out;
  out.reserve(texts.size());
  for (const auto& t : texts) {
    out.push_back(parse_integer(t));
  }
  return out;
}

unsigned small_base(const std::string& text) {
  const Integer b = parse_integer(text);
  if (b < 2 || b > DigitSet::kMaxBase) {
    throw PreconditionError("base must be in [2, " + std::to_string(DigitSet::kMaxBase) + "] here, got " + text);
  }
  return static_cast<unsigned>(b.get_ui());
}

Json primes_json(std::span<const Integer> primes) {
  Json j = Json::array();
  for (const auto& p : primes) {
    j.push_back(to_json(p));
  }
  return j;
}

std::vector<unsigned> digit_vector(const DigitSet& ds) { return {ds.digits().begin(), ds.digits().end()}; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void cmd_order(const Options& o, std::ostream& out) {
  const Integer b = parse_integer(o.base);
  Json j = {{"base", to_json(b)}};
  Integer d;
  Integer order;
  if (!o.modulus.empty()) {
    d = parse_integer(o.modulus);
    order = mult_order(b, d);
    j["modulus"] = to_json(d);
    j["order"] = to_json(order);
    j["method"] = "divisor-descent";
  } else {
    if (o.primes.size() != o.exponents.size()) {
      throw PreconditionError("--primes and --exponents must have the same length");
    }
    const auto primes = parse_primes(o.primes);
    const auto profile = build_profile(b, primes);
    std::vector<PrimePower> powers;
    d = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      powers.push_back({primes[i], o.exponents[i]});
      Integer pe;
      mpz_pow_ui(pe.get_mpz_t(), primes[i].get_mpz_t(), o.exponents[i]);
      d *= pe;
    }
    order = order_via_formula(profile, Factorization::from_factors(powers));
    if (order != mult_order(b, d)) {
      throw InvariantError("closed-form order disagrees with divisor descent for modulus " + d.get_str());
    }
    j["primes"] = primes_json(primes);
    j["exponents"] = o.exponents;
    j["modulus"] = to_json(d);
    j["order"] = to_json(order);
    j["method"] = "closed-form";
  }
  if (d <= kBruteForceLimit) {
    if (mult_order_bruteforce(b, d) != order) {
      throw InvariantError("order disagrees with brute force for modulus " + d.get_str());
    }
    j["verified"] = true;
  } else {
    j["verified"] = false;
  }
  emit(out, j);
}

void cmd_profile(const Options& o, std::ostream& out) {
  emit(out, to_json(build_profile(parse_integer(o.base), parse_primes(o.primes))));
}

void cmd_orbit(const Options& o, std::ostream& out) {
  const Integer b = parse_integer(o.base);
  const auto x = ReducedFraction::parse(o.frac);
  if (!o.decompose) {
    emit(out, to_json(orbit(b, x)));
    return;
  }
  const auto dec = decompose(build_profile(b, parse_primes(o.primes)), x);
  if (!dec.sets_equal) {
    throw InvariantError("A1 != A2 for " + x.str());
  }
  emit(out, to_json(dec));
}

void cmd_density(const Options& o, std::ostream& out) {
  const Integer b = parse_integer(o.base);
  const Rational eps = parse_rational(o.epsilon);
  const auto profile = build_profile(b, parse_primes(o.primes));
  const Rational D = density_bound(profile, eps);
  Json j = {{"base", to_json(b)},
            {"primes", primes_json(profile.primes())},
            {"epsilon", to_json(eps)},
            {"D", to_json(D)},
            {"max_denominator_below_D", to_json(floor(D))}};
  if (!o.frac.empty()) {
    const auto x = ReducedFraction::parse(o.frac);
    j["orbit"] = to_json(density_report(orbit(b, x).points, eps));
  }
  emit(out, j);
}

void cmd_certify(const Options& o, std::ostream& out, unsigned threads) {
  const DigitSet ds(small_base(o.base), o.digits);
  const Rational eps = o.epsilon.empty() ? ds.gap_radius() : parse_rational(o.epsilon);
  const auto profile = build_profile(Integer(ds.base()), parse_primes(o.primes));
  const auto cert = enumerate_s_integers(ds, profile, eps, threads);
  Json j = to_json(cert);
  const bool include = o.endpoints == "include";
  j["endpoint_convention"] = o.endpoints;
  j["count"] = include ? cert.count_with_endpoints : cert.count_without_endpoints;
  emit(out, j);
}

void cmd_member(const Options& o, std::ostream& out) {
  const DigitSet ds(small_base(o.base), o.digits);
  const auto x = ReducedFraction::parse(o.frac);
  Json j = {{"fraction", x.str()}, {"base", ds.base()}, {"digits", digit_vector(ds)}, {"member", member(ds, x)}};
  if (!x.is_one()) {
    j["expansion"] = to_json(expand(ds.base(), x));
  }
  emit(out, j);
}

void cmd_expand(const Options& o, std::ostream& out) {
  const unsigned b = small_base(o.base);
  const auto x = ReducedFraction::parse(o.frac);
  Json j = member_record(b, x);
  if (!x.is_one()) {
    const auto dual = dual_expansion(b, expand(b, x));
    j["dual"] = dual ? to_json(*dual) : Json(nullptr);
  }
  emit(out, j);
}

// "B^k" with B >= 2.
Integer den_form_base(const std::string& form) {
  const auto caret = form.find('^');
  if (caret == std::string::npos || form.substr(caret + 1) != "k") {
    throw PreconditionError("--den-form must look like B^k, got '" + form + "'");
  }
  const Integer B = parse_integer(form.substr(0, caret));
  if (B < 2) {
    throw PreconditionError("--den-form base must be >= 2");
  }
  return B;
}

void cmd_enumerate(const Options& o, std::ostream& out, unsigned threads) {
  const DigitSet ds(small_base(o.base), o.digits);
  const int modes = int(!o.den_form.empty()) + int(!o.denominators.empty()) + int(o.max_den > 0);
  if (modes != 1) {
    throw PreconditionError("enumerate needs exactly one of --den-form, --denominators, --max-den");
  }
  std::vector<ReducedFraction> members;
  if (o.max_den > 0) {
    members = members_up_to(ds, o.max_den, o.coprime, threads);
  } else {
    std::vector<Integer> dens;
    if (!o.den_form.empty()) {
      if (o.min_exp > o.max_exp) {
        throw PreconditionError("--min-exp exceeds --max-exp");
      }
      const Integer B = den_form_base(o.den_form);
      for (unsigned k = o.min_exp; k <= o.max_exp; ++k) {
        Integer d;
        mpz_pow_ui(d.get_mpz_t(), B.get_mpz_t(), k);
        dens.push_back(d);
      }
    } else {
      dens = parse_primes(o.denominators);
    }
    members = enumerate_members(ds, dens, threads);
  }
  if (o.format == "csv") {
    out << "num,den\n";
    for (const auto& x : members) {
      out << x.num().get_str() << "," << x.den().get_str() << "\n";
    }
    return;
  }
  for (const auto& x : members) {
    out << member_record(ds.base(), x).dump() << "\n";
  }
}

void cmd_count(const Options& o, std::ostream& out, unsigned threads) {
  const DigitSet ds(small_base(o.base), o.digits);
  if (o.max_den == 0) {
    throw PreconditionError("--max-den must be >= 1");
  }
  const auto counts = count_members(ds, o.max_den, o.coprime, threads);
  if (o.format == "csv") {
    out << counts_csv(counts);
    return;
  }
  Json j = to_json(counts);
  j["selected"] = o.reduced ? "count_reduced" : "count_all";
  j["count"] = o.reduced ? counts.reduced : counts.all;
  emit(out, j);
}

void cmd_bounds(const Options& o, std::ostream& out, unsigned threads) {
  const DigitSet ds(small_base(o.base), o.digits);
  if (o.max_den == 0) {
    throw PreconditionError("--max-den must be >= 1");
  }
  const Rational eps = o.epsilon.empty() ? ds.epsilon_exact() : parse_rational(o.epsilon);
  const auto members = members_up_to(ds, o.max_den, true, threads);
  std::vector<BoundReport> reports;
  for (const auto& x : members) {
    if (auto r = bound_report(Integer(ds.base()), eps, x)) {
      reports.push_back(std::move(*r));
    }
  }
  const std::optional<ConstantSummary> summary =
      reports.empty() ? std::nullopt : std::optional(aggregate_constants(reports));
  if (o.format == "csv") {
    out << bound_csv_header() << "\n";
    for (const auto& r : reports) {
      out << bound_csv_row(ds, r) << "\n";
    }
    if (summary) {
      const Json j = to_json(*summary);
      for (const auto& [key, value] : j.items()) {
        out << "# " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
    return;
  }
  emit(out, {{"base", ds.base()},
             {"digits", digit_vector(ds)},
             {"epsilon", to_json(eps)},
             {"max_denominator", o.max_den},
             {"members", members.size()},
             {"summary", summary ? to_json(*summary) : Json(nullptr)}});
}

// Seeded property checks over small instances: closed-form order vs brute
// force, A1 = A2 with |A1| = d0 ord(b, d1), and expansion round trips.
void cmd_verify(const Options& o, std::ostream& out) {
  static const std::vector<unsigned long> kPrimes = {2, 3, 5, 7, 11, 13};
  std::mt19937_64 rng(o.seed);
  std::uint64_t order_ok = 0, order_bad = 0, orbit_ok = 0, orbit_bad = 0, expand_ok = 0, expand_bad = 0;
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const unsigned long b = std::uniform_int_distribution<unsigned long>(2, 12)(rng);
    std::vector<Integer> S;
    std::vector<PrimePower> powers;
    unsigned long d = 1;
    for (auto p : kPrimes) {
      if (b % p == 0 || rng() % 2 == 0) {
        continue;
      }
      S.emplace_back(p);
      unsigned long e = 0;
      while (d * p <= 20000 && rng() % 3 != 0) {
        d *= p;
        ++e;
      }
      powers.push_back({Integer(p), e});
    }
    if (S.empty()) {
      continue;
    }
    const auto profile = build_profile(Integer(b), S);
    const Integer formula = order_via_formula(profile, powers);
    (formula == mult_order_bruteforce(Integer(b), Integer(d)) ? order_ok : order_bad)++;

    const unsigned long a = std::uniform_int_distribution<unsigned long>(0, d - 1)(rng);
    Rational q(a, d);
    q.canonicalize();
    const auto x = ReducedFraction::from_rational(q);
    const auto dec = decompose(profile, x);
    const bool size_ok = Integer(dec.a1.size()) == dec.split.d0 * dec.order_d1;
    (dec.sets_equal && size_ok ? orbit_ok : orbit_bad)++;

    const unsigned base = static_cast<unsigned>(b);
    (x.is_one() || expansion_value(base, expand(base, x)) == x.value() ? expand_ok : expand_bad)++;
  }
  const auto tally = [](std::uint64_t ok, std::uint64_t bad) { return Json{{"passed", ok}, {"failed", bad}}; };
  const bool pass = order_bad == 0 && orbit_bad == 0 && expand_bad == 0;
  emit(out, {{"trials", o.trials},
             {"seed", o.seed},
             {"checks",
              {{"order_formula", tally(order_ok, order_bad)},
               {"orbit_decomposition", tally(orbit_ok, orbit_bad)},
               {"expansion_round_trip", tally(expand_ok, expand_bad)}}},
             {"pass", pass}});
  if (!pass) {
    throw InvariantError("verify: property failures (see output)");
  }
}

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') {
      c = ' ';
    }
  }
  while (!s.empty() && s.back() == ' ') {
    s.pop_back();
  }
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact rational points of Cantor-like sets and orbit structure of x -> bx mod 1", "cantor-rat"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  std::optional<unsigned> threads_flag;
  app.add_option("--threads", threads_flag, "worker threads (default: $CR_THREADS or all cores)")
      ->check(CLI::Range(1, 1024));
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  const auto base = [&](CLI::App* s) { s->add_option("--base,-b", o.base, "base b >= 2")->required(); };
  const auto primes = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--primes,-S", o.primes, "comma-separated primes")->delimiter(',');
    if (required) {
      opt->required();
    }
    return opt;
  };
  const auto digits = [&](CLI::App* s) {
    s->add_option("--digits,-D", o.digits, "comma-separated allowed digits")->delimiter(',')->required();
  };
  const auto frac = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--frac,-x", o.frac, "fraction a/d");
    if (required) {
      opt->required();
    }
  };
  const auto epsilon = [&](CLI::App* s, bool required, const char* help) {
    auto* opt = s->add_option("--epsilon,-e", o.epsilon, help);
    if (required) {
      opt->required();
    }
  };

  std::function<void(unsigned)> action;

  auto* order = app.add_subcommand("order", "multiplicative order of b modulo d");
  base(order);
  auto* modulus = order->add_option("--modulus,-m", o.modulus, "modulus d");
  auto* order_primes = primes(order, false);
  auto* order_exps = order->add_option("--exponents", o.exponents, "exponents matching --primes")->delimiter(',');
  modulus->excludes(order_primes)->excludes(order_exps);
  order_primes->needs(order_exps);
  order_exps->needs(order_primes);
  order->callback([&] {
    if (o.modulus.empty() && o.primes.empty()) {
      throw CLI::ValidationError("order", "one of --modulus or --primes/--exponents is required");
    }
    action = [&](unsigned) { cmd_order(o, out); };
  });

  auto* profile = app.add_subcommand("profile", "lifting thresholds n_p, N_p and orders for a prime set");
  base(profile);
  primes(profile, true);
  profile->callback([&] { action = [&](unsigned) { cmd_profile(o, out); }; });

  auto* orb = app.add_subcommand("orbit", "orbit of a/d under x -> bx mod 1");
  base(orb);
  frac(orb, true);
  auto* dec = orb->add_flag("--decompose", o.decompose, "split d = d0 d1 and compare A1 with A2");
  primes(orb, false)->needs(dec);
  orb->callback([&] {
    if (o.decompose && o.primes.empty()) {
      throw CLI::ValidationError("orbit", "--decompose requires --primes");
    }
    action = [&](unsigned) { cmd_orbit(o, out); };
  });

  auto* density = app.add_subcommand("density", "effective bound D beyond which orbits are eps-dense");
  base(density);
  primes(density, true);
  epsilon(density, true, "epsilon as p/q");
  frac(density, false);
  density->callback([&] { action = [&](unsigned) { cmd_density(o, out); }; });

  auto* certify = app.add_subcommand("certify", "every S-integer in C(b, digits), with its completeness bound");
  base(certify);
  digits(certify);
  primes(certify, true);
  epsilon(certify, false, "epsilon as p/q (default: the gap radius of C)");
  certify->add_option("--endpoints", o.endpoints, "which count to report as 'count'")
      ->check(CLI::IsMember({"include", "exclude"}));
  certify->callback([&] { action = [&](unsigned t) { cmd_certify(o, out, t); }; });

  auto* mem = app.add_subcommand("member", "is a/d in C(b, digits)");
  base(mem);
  digits(mem);
  frac(mem, true);
  mem->callback([&] { action = [&](unsigned) { cmd_member(o, out); }; });

  auto* exp = app.add_subcommand("expand", "base-b expansion of a/d as preperiod and period");
  base(exp);
  frac(exp, true);
  exp->callback([&] { action = [&](unsigned) { cmd_expand(o, out); }; });

  auto* en = app.add_subcommand("enumerate", "members of C(b, digits) over a family of denominators");
  base(en);
  digits(en);
  en->add_option("--den-form", o.den_form, "denominators B^k for min-exp <= k <= max-exp");
  en->add_option("--min-exp", o.min_exp, "smallest exponent (default 1)");
  en->add_option("--max-exp", o.max_exp, "largest exponent");
  en->add_option("--denominators", o.denominators, "explicit denominators")->delimiter(',');
  en->add_option("--max-den,-T", o.max_den, "every denominator up to T");
  en->add_flag("--coprime", o.coprime, "with --max-den, only denominators coprime to b");
  en->callback([&] { action = [&](unsigned t) { cmd_enumerate(o, out, t); }; });

  auto* count = app.add_subcommand("count", "number of rationals in C(b, digits) with denominator <= T");
  base(count);
  digits(count);
  count->add_option("--max-den,-T", o.max_den, "T")->required();
  count->add_flag("--reduced", o.reduced, "report distinct values rather than pairs (a, d)");
  count->add_flag("--coprime", o.coprime, "only denominators coprime to b");
  count->callback([&] { action = [&](unsigned t) { cmd_count(o, out, t); }; });

  auto* bounds = app.add_subcommand("bounds", "empirical constants of the prime-size bounds over members");
  base(bounds);
  digits(bounds);
  bounds->add_option("--max-den,-T", o.max_den, "T")->required();
  epsilon(bounds, false, "epsilon as p/q (default: exact sup-distance)");
  bounds->callback([&] { action = [&](unsigned t) { cmd_bounds(o, out, t); }; });

  auto* verify = app.add_subcommand("verify", "seeded property checks against brute force");
  verify->add_option("--trials", o.trials, "number of random instances");
  verify->add_option("--seed", o.seed, "RNG seed");
  verify->callback([&] { action = [&](unsigned) { cmd_verify(o, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "cantor-rat: error: " << one_line(e.what()) << "\n";
    return kExitPrecondition;
  }

  try {
    const unsigned threads = threads_flag ? *threads_flag : default_threads();
    action(threads);
    out.flush();
    return kExitOk;
  } catch (const PreconditionError& e) {
    err << "cantor-rat: precondition violated: " << one_line(e.what()) << "\n";
    return kExitPrecondition;
  } catch (const InvariantError& e) {
    err << "cantor-rat: invariant failed: " << one_line(e.what()) << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "cantor-rat: internal error: " << one_line(e.what()) << "\n";
    return kExitInvariant;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cr::cli
