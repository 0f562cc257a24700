#include "cr/numtheory.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "cr/detail/u64.hpp"
#include "cr/errors.hpp"

namespace cr {

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) {
        continue;
      }
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialLimit; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_round(const Integer& n, const Integer& n_minus_1, const Integer& odd_part, unsigned long twos,
                        const Integer& base) {
  Integer x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), odd_part.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) {
    return true;
  }
  for (unsigned long r = 1; r < twos; ++r) {
    x = x * x % n;
    if (x == n_minus_1) {
      return true;
    }
    if (x == 1) {
      return false;
    }
  }
  return false;
}

// Brent's variant of Pollard rho. n must be odd and composite.
Integer rho_split(const Integer& n) {
  std::mt19937_64 rng(0x5eed5eedULL);
  for (;;) {
    const Integer c = from_u64(rng() % 1000 + 1);
    Integer y = from_u64(rng() % 1000 + 2);
    const unsigned long m = 128;
    Integer g = 1;
    Integer q = 1;
    Integer x;
    Integer ys;
    unsigned long r = 1;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) {
        y = (y * y + c) % n;
      }
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = (y * y + c) % n;
          Integer diff = x - y;
          q = q * abs(diff) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        Integer diff = x - ys;
        g = gcd(abs(diff), n);
      } while (g == 1);
    }
    if (g != n) {
      return g;
    }
  }
}

void factor_large(const Integer& n, std::map<Integer, unsigned long>& out) {
  if (n == 1) {
    return;
  }
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  // Rho needs about sqrt(p) steps to split p^k, so roots come off first.
  if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
    Integer root;
    for (unsigned long k = 2;; ++k) {
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        for (unsigned long i = 0; i < k; ++i) {
          factor_large(root, out);
        }
        return;
      }
    }
  }
  const Integer d = rho_split(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

void check_prime_arg(const Integer& p) {
  if (p < 2) {
    throw PreconditionError("expected a prime, got " + p.get_str());
  }
}

}  // namespace

Factorization Factorization::from_factors(std::vector<PrimePower> factors) {
  std::map<Integer, unsigned long> merged;
  for (auto& f : factors) {
    if (f.exponent == 0) {
      continue;
    }
    if (!is_prime(f.prime)) {
      throw PreconditionError("factor " + f.prime.get_str() + " is not prime");
    }
    merged[f.prime] += f.exponent;
  }
  Factorization out;
  for (auto& [p, e] : merged) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    out.value_ *= pe;
    out.factors_.push_back({p, e});
  }
  return out;
}

unsigned long Factorization::exponent_of(const Integer& p) const {
  for (const auto& f : factors_) {
    if (f.prime == p) {
      return f.exponent;
    }
  }
  return 0;
}

Integer Factorization::radical() const {
  Integer r = 1;
  for (const auto& f : factors_) {
    r *= f.prime;
  }
  return r;
}

const Integer& Factorization::largest_prime() const {
  if (factors_.empty()) {
    throw PreconditionError("1 has no prime divisor");
  }
  return factors_.back().prime;
}

bool is_prime(const Integer& n) {
  if (n < 2) {
    return false;
  }
  static constexpr unsigned long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long p : kBases) {
    if (n == p) {
      return true;
    }
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      return false;
    }
  }
  const Integer n_minus_1 = n - 1;
  Integer odd_part = n_minus_1;
  const unsigned long twos = mpz_scan1(odd_part.get_mpz_t(), 0);
  odd_part >>= twos;
  for (unsigned long p : kBases) {
    if (!miller_rabin_round(n, n_minus_1, odd_part, twos, from_u64(p))) {
      return false;
    }
  }
  // 3317044064679887385961981 is the first strong pseudoprime to all 13 bases.
  static const Integer kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) {
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Factorization factorize(const Integer& n) {
  if (n < 1) {
    throw PreconditionError("factorize requires n >= 1, got " + n.get_str());
  }
  std::map<Integer, unsigned long> found;
  Integer rest = n;
  bool exhausted = true;
  for (unsigned long p : small_primes()) {
    const Integer pp = from_u64(p) * from_u64(p);
    if (pp > rest) {
      exhausted = false;
      break;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned long e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      found[from_u64(p)] = e;
    }
  }
  if (rest > 1) {
    if (!exhausted) {
      found[rest] += 1;
    } else {
      factor_large(rest, found);
    }
  }
  std::vector<PrimePower> factors;
  factors.reserve(found.size());
  for (auto& [p, e] : found) {
    factors.push_back({p, e});
  }
  Factorization out = Factorization::from_factors(std::move(factors));
  if (out.value() != n) {
    throw InvariantError("factorization of " + n.get_str() + " does not reconstruct it");
  }
  return out;
}

unsigned long vp(const Integer& n, const Integer& p) {
  check_prime_arg(p);
  if (n == 0) {
    throw PreconditionError("valuation of 0 is undefined");
  }
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

long vp(const Rational& x, const Integer& p) {
  if (x == 0) {
    throw PreconditionError("valuation of 0 is undefined");
  }
  return static_cast<long>(vp(x.get_num(), p)) - static_cast<long>(vp(x.get_den(), p));
}

Integer radical(const Integer& n) { return factorize(n).radical(); }

Integer largest_prime(const Integer& n) {
  if (n < 2) {
    throw PreconditionError("largest_prime requires n >= 2, got " + n.get_str());
  }
  return factorize(n).largest_prime();
}

Integer mod_pow(const Integer& b, const Integer& e, const Integer& m) {
  if (m < 1) {
    throw PreconditionError("modulus must be >= 1");
  }
  if (e < 0) {
    throw PreconditionError("exponent must be >= 0");
  }
  Integer r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

namespace {

void check_unit(const Integer& b, const Integer& m) {
  if (m < 1) {
    throw PreconditionError("modulus must be >= 1, got " + m.get_str());
  }
  if (gcd(b, m) != 1) {
    throw PreconditionError("order undefined: gcd(" + b.get_str() + ", " + m.get_str() + ") != 1");
  }
}

}  // namespace

Integer mult_order_bruteforce(const Integer& b, const Integer& m) {
  check_unit(b, m);
  if (m == 1) {
    return 1;
  }
  Integer step = b % m;
  if (step < 0) {
    step += m;
  }
  if (fits_u64(m)) {
    return from_u64(detail::order_by_stepping(to_u64(step), to_u64(m)));
  }
  Integer x = step;
  Integer k = 1;
  while (x != 1) {
    x = x * step % m;
    ++k;
  }
  return k;
}

Integer mult_order_fast(const Integer& b, const Integer& m, const Factorization& exponent_multiple) {
  check_unit(b, m);
  if (m == 1) {
    return 1;
  }
  Integer order = exponent_multiple.value();
  if (mod_pow(b, order, m) != 1) {
    throw PreconditionError(exponent_multiple.value().get_str() + " is not a multiple of the order of " +
                            b.get_str() + " mod " + m.get_str());
  }
  for (const auto& [q, e] : exponent_multiple.factors()) {
    for (unsigned long i = 0; i < e; ++i) {
      const Integer candidate = order / q;
      if (mod_pow(b, candidate, m) != 1) {
        break;
      }
      order = candidate;
    }
  }
  return order;
}

Integer mult_order(const Integer& b, const Integer& m) {
  check_unit(b, m);
  return mult_order_fast(b, m, unit_group_exponent(factorize(m)));
}

Integer order_of_power(const Integer& s, const Integer& t) {
  if (s < 1 || t < 1) {
    throw PreconditionError("order_of_power requires s >= 1 and t >= 1");
  }
  return s / gcd(s, t);
}

Integer unit_group_exponent(const Integer& p, unsigned long n) {
  check_prime_arg(p);
  if (n == 0) {
    throw PreconditionError("unit_group_exponent requires n >= 1");
  }
  Integer out;
  if (p == 2) {
    if (n <= 2) {
      return Integer(static_cast<unsigned long>(n));
    }
    mpz_ui_pow_ui(out.get_mpz_t(), 2, n - 2);
    return out;
  }
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), n - 1);
  return out * (p - 1);
}

Factorization unit_group_exponent(const Factorization& m) {
  std::map<Integer, unsigned long> lcm;
  auto absorb = [&lcm](const Integer& q, unsigned long e) {
    if (e == 0) {
      return;
    }
    auto& slot = lcm[q];
    slot = std::max(slot, e);
  };
  for (const auto& [p, n] : m.factors()) {
    if (p == 2) {
      absorb(p, n == 1 ? 0 : (n == 2 ? 1 : n - 2));
      continue;
    }
    absorb(p, n - 1);
    const Factorization below = factorize(p - 1);
    for (const auto& [q, e] : below.factors()) {
      absorb(q, e);
    }
  }
  std::vector<PrimePower> factors;
  for (auto& [q, e] : lcm) {
    factors.push_back({q, e});
  }
  return Factorization::from_factors(std::move(factors));
}

}  // namespace cr
