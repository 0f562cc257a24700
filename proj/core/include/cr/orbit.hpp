#pragma once

// Exact dynamics of T_b(x) = bx mod 1 on rationals.

#include <cstddef>
#include <span>
#include <vector>

#include "cr/fraction.hpp"
#include "cr/integer.hpp"
#include "cr/orders.hpp"

namespace cr {

/// T_b(x) for x in [0, 1). Throws PreconditionError for x = 1 or b < 2.
ReducedFraction apply_tb(const Integer& b, const ReducedFraction& x);

struct Orbit {
  std::vector<ReducedFraction> points;  // first-visit order
  std::size_t preperiod = 0;
  std::size_t period = 0;
};

/// Iterates T_b until the first repeated point. Works for any x in [0, 1),
/// including denominators sharing factors with b.
Orbit orbit(const Integer& b, const ReducedFraction& x);

/// The two descriptions of the orbit of a/d with gcd(d, b) = 1:
///   A1 = { T_b^i(a/d) : 0 <= i < ord(b, d) }
///   A2 = { (T_b^i(a/d1) + j) / d0 : 0 <= i < ord(b, d1), 0 <= j < d0 }
/// Both sets are stored sorted.
struct OrbitDecomposition {
  Integer base;
  ReducedFraction fraction;
  DenominatorSplit split;
  Integer order;  // ord(b, d)
  Integer order_d1;
  std::vector<ReducedFraction> a1;
  std::vector<ReducedFraction> a2;
  bool sets_equal = false;
};

/// Requires the prime factors of d to lie in the profile's S (hence
/// gcd(d, b) = 1). Throws InvariantError if |A1| != d0 * |orbit(a/d1)|.
OrbitDecomposition decompose(const OrderProfile& profile, const ReducedFraction& x);

struct DensityReport {
  std::vector<ReducedFraction> points;  // sorted, distinct
  Rational cover_radius;
  Rational epsilon;
  bool is_dense = false;
};

/// sup over x in [0, 1] of the distance to the nearest point:
/// max(first, 1 - last, largest gap / 2). Points must be sorted and
/// non-empty.
Rational cover_radius(std::span<const ReducedFraction> sorted_points);

/// Throws PreconditionError for an empty point set.
DensityReport density_report(std::vector<ReducedFraction> points, const Rational& epsilon);

/// D = (1 / 2 epsilon) * prod_{p in S} p^N_p. Every reduced S-integer a/d
/// with d > D has an epsilon-dense orbit. Throws for epsilon <= 0.
Rational density_bound(const OrderProfile& profile, const Rational& epsilon);

/// Largest divisor of d coprime to b.
Integer coprime_part(const Integer& d, const Integer& b);

/// S together with the primes of d' that do not divide b, sorted.
std::vector<Integer> extend_prime_set(std::span<const Integer> primes, const Integer& d_prime, const Integer& b);

}  // namespace cr
