#include "cr/orders.hpp"

#include <algorithm>

#include "cr/errors.hpp"

namespace cr {

namespace {

Integer power(const Integer& p, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), e);
  return out;
}

void check_base_and_prime(const Integer& b, const Integer& p) {
  if (b < 2) {
    throw PreconditionError("base must be >= 2, got " + b.get_str());
  }
  if (!is_prime(p)) {
    throw PreconditionError(p.get_str() + " is not prime");
  }
  if (b % p == 0) {
    throw PreconditionError("prime " + p.get_str() + " divides the base " + b.get_str());
  }
}

}  // namespace

std::vector<Integer> OrderProfile::primes() const {
  std::vector<Integer> out;
  out.reserve(records_.size());
  for (const auto& r : records_) {
    out.push_back(r.prime);
  }
  return out;
}

bool OrderProfile::contains(const Integer& p) const {
  return std::any_of(records_.begin(), records_.end(), [&](const auto& r) { return r.prime == p; });
}

const PrimeThresholds& OrderProfile::at(const Integer& p) const {
  for (const auto& r : records_) {
    if (r.prime == p) {
      return r;
    }
  }
  throw PreconditionError("prime " + p.get_str() + " is not in S");
}

Integer OrderProfile::threshold_modulus() const {
  Integer m = 1;
  for (const auto& r : records_) {
    m *= power(r.prime, r.N);
  }
  return m;
}

unsigned long compute_np(const Integer& b, const Integer& p) {
  check_base_and_prime(b, p);
  if (p == 2) {
    return std::max(3UL, vp(Integer(b * b - 1), p));
  }
  const Integer x = power(b, to_u64(p) - 1) - 1;
  return std::max(1UL, vp(x, p));
}

unsigned long compute_Np(std::span<const LiftData> lifts, const Integer& p) {
  const LiftData* own = nullptr;
  for (const auto& l : lifts) {
    if (l.prime == p) {
      own = &l;
    }
  }
  if (own == nullptr) {
    throw PreconditionError("prime " + p.get_str() + " has no lift data");
  }
  const unsigned long base = own->n - vp(own->order, p);
  unsigned long best = 0;
  for (const auto& q : lifts) {
    best = std::max(best, base + vp(q.order, p));
  }
  return best;
}

OrderProfile build_profile(const Integer& b, std::vector<Integer> primes) {
  if (primes.empty()) {
    throw PreconditionError("prime set S must be non-empty");
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  std::vector<LiftData> lifts;
  lifts.reserve(primes.size());
  for (const auto& p : primes) {
    check_base_and_prime(b, p);
    const unsigned long n = compute_np(b, p);
    // n_p is small, so stepping through the powers is cheap and keeps the
    // profile independent of the fast order path.
    lifts.push_back({p, n, mult_order_bruteforce(b, power(p, n))});
  }

  OrderProfile profile;
  profile.base_ = b;
  for (const auto& l : lifts) {
    const unsigned long N = compute_Np(lifts, l.prime);
    if (N < l.n) {
      throw InvariantError("N_p < n_p for p = " + l.prime.get_str());
    }
    profile.records_.push_back({l.prime, l.n, N, l.order});
  }
  return profile;
}

DenominatorSplit split_denominator(const OrderProfile& profile, const Factorization& d) {
  DenominatorSplit split{d.value(), 1, 1};
  for (const auto& [p, e] : d.factors()) {
    const auto& rec = profile.at(p);
    if (e > rec.N) {
      split.d0 *= power(p, e - rec.N);
    }
    split.d1 *= power(p, std::min(e, rec.N));
  }
  return split;
}

Integer order_via_formula(const OrderProfile& profile, std::span<const PrimePower> exponents) {
  Integer excess = 1;
  std::vector<PrimePower> bounded;
  for (const auto& [p, e] : exponents) {
    const auto& rec = profile.at(p);
    if (e > rec.N) {
      excess *= power(p, e - rec.N);
    }
    bounded.push_back({p, std::min(e, rec.N)});
  }
  const Factorization d1 = Factorization::from_factors(std::move(bounded));
  if (d1.is_one()) {
    return excess;
  }
  return excess * mult_order_fast(profile.base(), d1.value(), unit_group_exponent(d1));
}

Integer order_via_formula(const OrderProfile& profile, const Factorization& d) {
  return order_via_formula(profile, d.factors());
}

}  // namespace cr
