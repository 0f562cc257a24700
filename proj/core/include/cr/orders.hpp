#pragma once

// Lifting thresholds for the order of b modulo S-smooth integers, and the
// closed form
//
//   ord(b, d) = (prod over e_p > N_p of p^(e_p - N_p)) * ord(b, prod p^min(e_p, N_p))
//
// for d = prod_{p in S} p^e_p.

#include <span>
#include <vector>

#include "cr/integer.hpp"
#include "cr/numtheory.hpp"

namespace cr {

// Per-prime data of an OrderProfile.
struct PrimeThresholds {
  Integer prime;
  unsigned long n = 0;  // lifting threshold n_p
  unsigned long N = 0;  // joint threshold N_p >= n_p
  Integer order;        // ord(b, p^n_p)
};

/// Immutable thresholds for a base b and prime set S. Records are sorted by
/// prime. Safe to share between threads.
class OrderProfile {
 public:
  const Integer& base() const { return base_; }
  std::span<const PrimeThresholds> records() const { return records_; }
  std::vector<Integer> primes() const;

  bool contains(const Integer& p) const;
  /// Throws PreconditionError when p is not in S.
  const PrimeThresholds& at(const Integer& p) const;

  /// prod_{p in S} p^N_p, the modulus below which orders are not lifted.
  Integer threshold_modulus() const;

 private:
  friend OrderProfile build_profile(const Integer& b, std::vector<Integer> primes);

  Integer base_;
  std::vector<PrimeThresholds> records_;
};

/// Order of b modulo p^n_p together with n_p, the input to compute_Np.
struct LiftData {
  Integer prime;
  unsigned long n = 0;
  Integer order;
};

/// n_p: the exponent above which ord(b, p^e) gains exactly one factor p per
/// step. For odd p this is max{1, v_p(b^(p-1) - 1)}. For p = 2 it is
/// max{3, v_2(b^2 - 1)}; v_2(b^2 - 1) = v_2(b - 1) + v_2(b + 1), which is
/// strictly larger than max{v_2(b - 1), v_2(b + 1)} and is what the lift
/// needs when b = 7 (mod 8).
unsigned long compute_np(const Integer& b, const Integer& p);

/// N_p = max over q in S of n_p - v_p(ord(b, p^n_p)) + v_p(ord(b, q^n_q)).
unsigned long compute_Np(std::span<const LiftData> lifts, const Integer& p);

/// Throws PreconditionError for b < 2, empty S, a non-prime in S, or a prime
/// of S dividing b (the message names the prime).
OrderProfile build_profile(const Integer& b, std::vector<Integer> primes);

struct DenominatorSplit {
  Integer d;
  Integer d0;  // excess part, prod over e_p > N_p of p^(e_p - N_p)
  Integer d1;  // bounded part, prod p^min(e_p, N_p)
};

/// Throws PreconditionError when d has a prime outside S.
DenominatorSplit split_denominator(const OrderProfile& profile, const Factorization& d);

/// ord(b, d) from the closed form. Exponent entries may be 0, and primes of
/// S may be absent. Throws PreconditionError for a prime outside S.
Integer order_via_formula(const OrderProfile& profile, std::span<const PrimePower> exponents);
Integer order_via_formula(const OrderProfile& profile, const Factorization& d);

}  // namespace cr
