#include "cr/orbit.hpp"

#include <algorithm>
#include <map>

#include "cr/errors.hpp"

namespace cr {

ReducedFraction apply_tb(const Integer& b, const ReducedFraction& x) {
  if (b < 2) {
    throw PreconditionError("base must be >= 2, got " + b.get_str());
  }
  if (x.is_one()) {
    throw PreconditionError("T_b is defined on [0, 1); got 1");
  }
  Integer r = b * x.num();
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), x.den().get_mpz_t());
  return ReducedFraction(std::move(r), x.den());
}

Orbit orbit(const Integer& b, const ReducedFraction& x) {
  Orbit out;
  std::map<ReducedFraction, std::size_t> seen;
  ReducedFraction cur = x;
  for (;;) {
    auto [it, inserted] = seen.emplace(cur, out.points.size());
    if (!inserted) {
      out.preperiod = it->second;
      out.period = out.points.size() - it->second;
      return out;
    }
    out.points.push_back(cur);
    cur = apply_tb(b, cur);
  }
}

OrbitDecomposition decompose(const OrderProfile& profile, const ReducedFraction& x) {
  const Integer& b = profile.base();
  if (x.is_one()) {
    throw PreconditionError("decompose expects a/d in [0, 1); got 1");
  }
  if (gcd(x.den(), b) != 1) {
    throw PreconditionError("denominator " + x.den().get_str() + " shares a factor with the base " + b.get_str());
  }
  const Factorization d = factorize(x.den());

  OrbitDecomposition out;
  out.base = b;
  out.fraction = x;
  out.split = split_denominator(profile, d);
  out.order = order_via_formula(profile, d);

  ReducedFraction cur = x;
  for (Integer i = 0; i < out.order; ++i) {
    out.a1.push_back(cur);
    cur = apply_tb(b, cur);
  }
  std::sort(out.a1.begin(), out.a1.end());
  if (std::adjacent_find(out.a1.begin(), out.a1.end()) != out.a1.end()) {
    throw InvariantError("orbit of " + x.str() + " repeats before ord(b, d) = " + out.order.get_str() + " steps");
  }

  const Integer& d0 = out.split.d0;
  const Integer& d1 = out.split.d1;
  Integer a_mod = x.num() % d1;
  const Orbit inner = orbit(b, ReducedFraction(a_mod, d1));
  if (inner.preperiod != 0) {
    throw InvariantError("orbit of a/d1 is not purely periodic");
  }
  out.order_d1 = from_u64(inner.period);
  if (Integer(static_cast<unsigned long>(out.a1.size())) != d0 * out.order_d1) {
    throw InvariantError("|A1| = " + std::to_string(out.a1.size()) + " but d0 * ord(b, d1) = " +
                         Integer(d0 * out.order_d1).get_str());
  }

  for (const auto& z : inner.points) {
    for (Integer j = 0; j < d0; ++j) {
      out.a2.emplace_back(z.num() + j * z.den(), z.den() * d0);
    }
  }
  std::sort(out.a2.begin(), out.a2.end());
  out.sets_equal = out.a1 == out.a2;
  return out;
}

Rational cover_radius(std::span<const ReducedFraction> sorted_points) {
  if (sorted_points.empty()) {
    throw PreconditionError("cover radius of an empty point set");
  }
  Rational best = sorted_points.front().value();
  const Rational tail = 1 - sorted_points.back().value();
  if (tail > best) {
    best = tail;
  }
  for (std::size_t i = 1; i < sorted_points.size(); ++i) {
    Rational half_gap = (sorted_points[i].value() - sorted_points[i - 1].value()) / 2;
    if (half_gap > best) {
      best = half_gap;
    }
  }
  return best;
}

DensityReport density_report(std::vector<ReducedFraction> points, const Rational& epsilon) {
  if (points.empty()) {
    throw PreconditionError("density report needs at least one point");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  DensityReport out;
  out.cover_radius = cover_radius(points);
  out.points = std::move(points);
  out.epsilon = epsilon;
  out.is_dense = out.cover_radius <= epsilon;
  return out;
}

Rational density_bound(const OrderProfile& profile, const Rational& epsilon) {
  if (epsilon <= 0) {
    throw PreconditionError("epsilon must be > 0");
  }
  Rational out = Rational(profile.threshold_modulus()) / (2 * epsilon);
  out.canonicalize();
  return out;
}

Integer coprime_part(const Integer& d, const Integer& b) {
  if (d < 1) {
    throw PreconditionError("coprime_part requires d >= 1");
  }
  if (b < 2) {
    throw PreconditionError("base must be >= 2, got " + b.get_str());
  }
  Integer out = d;
  for (Integer g = gcd(out, b); g > 1; g = gcd(out, b)) {
    out /= g;
  }
  return out;
}

std::vector<Integer> extend_prime_set(std::span<const Integer> primes, const Integer& d_prime, const Integer& b) {
  std::vector<Integer> out(primes.begin(), primes.end());
  for (const auto& p : out) {
    if (b % p == 0) {
      throw PreconditionError("prime " + p.get_str() + " divides the base " + b.get_str());
    }
  }
  const Factorization fd = factorize(d_prime);
  for (const auto& f : fd.factors()) {
    if (b % f.prime != 0) {
      out.push_back(f.prime);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cr
