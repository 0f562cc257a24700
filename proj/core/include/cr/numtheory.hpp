#pragma once

// Exact integer primitives: factorization, valuations, modular powers and
// multiplicative orders. Everything works on unbounded integers.

#include <span>
#include <vector>

#include "cr/integer.hpp"

namespace cr {

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its prime factorization.
///
/// Factors are kept sorted by prime with every exponent >= 1, and the
/// product of the factors always equals value(). The empty factorization
/// represents 1.
class Factorization {
 public:
  Factorization() = default;

  /// Builds a factorization from explicit prime powers. Entries with
  /// exponent 0 are dropped and repeated primes are merged. Throws
  /// PreconditionError if any listed "prime" fails the primality test.
  static Factorization from_factors(std::vector<PrimePower> factors);

  const Integer& value() const { return value_; }
  std::span<const PrimePower> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  /// Exponent of p in value(); 0 when p does not divide it.
  unsigned long exponent_of(const Integer& p) const;

  Integer radical() const;

  /// Throws PreconditionError for value() == 1.
  const Integer& largest_prime() const;

  friend bool operator==(const Factorization& a, const Factorization& b) { return a.factors_ == b.factors_; }

 private:
  Integer value_{1};
  std::vector<PrimePower> factors_;
};

/// Deterministic for n < 3.3e24 (Miller-Rabin on the first 13 prime bases);
/// above that, extra random rounds make errors astronomically unlikely.
bool is_prime(const Integer& n);

/// Trial division by primes up to 10^6, then Pollard rho (Brent) on the
/// cofactor. Requires n >= 1.
Factorization factorize(const Integer& n);

/// Exponent of the prime p in n. Throws for n == 0.
unsigned long vp(const Integer& n, const Integer& p);

/// Signed valuation of a nonzero rational.
long vp(const Rational& x, const Integer& p);

Integer radical(const Integer& n);
Integer largest_prime(const Integer& n);

/// b^e mod m as a residue in [0, m). Negative b is reduced first.
Integer mod_pow(const Integer& b, const Integer& e, const Integer& m);

/// Least k >= 1 with b^k = 1 (mod m), found by repeated multiplication.
/// Throws PreconditionError when gcd(b, m) != 1.
Integer mult_order_bruteforce(const Integer& b, const Integer& m);

/// Order of b modulo m by divisor descent on a known multiple E of the
/// order, supplied factored. Throws PreconditionError when b^E != 1 (mod m).
Integer mult_order_fast(const Integer& b, const Integer& m, const Factorization& exponent_multiple);

/// Convenience: factors m, takes the unit-group exponent as the multiple
/// and runs the fast descent.
Integer mult_order(const Integer& b, const Integer& m);

/// Order of g^t when g has order s: s / gcd(s, t).
Integer order_of_power(const Integer& s, const Integer& t);

/// Exponent of (Z/p^n)^x: (p-1)p^(n-1) for odd p; 1, 2, 2^(n-2) for p = 2
/// and n = 1, 2, >= 3.
Integer unit_group_exponent(const Integer& p, unsigned long n);

/// Exponent of (Z/m)^x for factored m, returned factored (lcm over the
/// prime-power components).
Factorization unit_group_exponent(const Factorization& m);

}  // namespace cr
