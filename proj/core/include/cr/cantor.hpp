#pragma once

// Generalized Cantor sets C(b, D): reals in [0, 1] with a base-b expansion
// using only digits from D.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cr/fraction.hpp"
#include "cr/integer.hpp"
#include "cr/orders.hpp"

namespace cr {

class DigitSet {
 public:
  static constexpr unsigned kMaxBase = 1U << 16;

  /// Throws PreconditionError for b < 2, b > kMaxBase, an empty digit list
  /// or a digit >= b. Duplicates are ignored.
  DigitSet(unsigned base, std::vector<unsigned> digits);

  unsigned base() const { return base_; }
  std::span<const unsigned> digits() const { return digits_; }
  bool contains(unsigned digit) const { return digit < base_ && mask_[digit]; }
  bool is_full() const { return digits_.size() == base_; }

  /// Length of the longest run of consecutive missing digits (0 when full).
  unsigned longest_missing_run() const { return missing_run_; }

  /// m / (2b) with m the longest missing run.
  Rational epsilon_claimed() const;

  /// Exact sup over x in [0, 1) of dist(x, C); 0 for the full digit set.
  const Rational& epsilon_exact() const { return epsilon_exact_; }

  /// Half the longest gap of C viewed on the circle R/Z: interior gaps and
  /// the wrap-around gap [max C, 1] + [0, min C]. An orbit whose circular
  /// spacing is below 2 * gap_radius() cannot lie in C, which is what
  /// finiteness certificates rely on. Never exceeds epsilon_exact().
  const Rational& gap_radius() const { return gap_radius_; }

  /// min C = 0.(min D) and max C = 0.(max D) in base b.
  Rational min_point() const;
  Rational max_point() const;

  /// Prime factors of the base with their exponents.
  const std::vector<std::pair<std::uint64_t, unsigned>>& base_factors() const { return base_factors_; }

  /// "0,2"
  std::string digits_str() const;

 private:
  unsigned base_;
  std::vector<unsigned> digits_;
  std::vector<bool> mask_;
  unsigned missing_run_ = 0;
  Rational epsilon_exact_;
  Rational gap_radius_;
  std::vector<std::pair<std::uint64_t, unsigned>> base_factors_;
};

/// Canonical eventually periodic base-b expansion: shortest preperiod, then
/// shortest period. Terminating values have period {0}.
struct Expansion {
  std::vector<unsigned> preperiod;
  std::vector<unsigned> period;

  friend bool operator==(const Expansion&, const Expansion&) = default;
};

/// Requires x in [0, 1).
Expansion expand(unsigned base, const ReducedFraction& x);

/// The rational with the given expansion.
Rational expansion_value(unsigned base, const Expansion& e);

/// The alternative expansion of a terminating nonzero value (last nonzero
/// digit decremented, then (b-1) repeating). Empty optional otherwise.
std::optional<Expansion> dual_expansion(unsigned base, const Expansion& e);

/// True iff some base-b expansion of x uses only digits of D. Both
/// expansions of terminating values are tried; 1 = 0.(b-1)(b-1)...
bool member(const DigitSet& ds, const ReducedFraction& x);

/// Closed-interval sup-distance: max of min C, 1 - max C, and half of the
/// largest first-level interior gap. Deeper gaps are scaled copies.
Rational sup_distance(const DigitSet& ds);

// ---------------------------------------------------------------------------
// Enumeration

/// Largest denominator accepted by the word-sized enumeration core.
inline constexpr std::uint64_t kMaxEnumerationDenominator = std::uint64_t{1} << 40;

/// Numerators a in [0, d] with gcd(a, d) = 1 and a/d in C, ascending.
/// For d = 1 this is a subset of {0, 1}.
std::vector<std::uint64_t> member_numerators(const DigitSet& ds, std::uint64_t d);

/// |member_numerators(ds, d)| without materializing the list.
std::uint64_t count_reduced_members(const DigitSet& ds, std::uint64_t d);

/// All reduced members whose denominator is in `denominators` (which must
/// be distinct), sorted by value. Work is spread over `threads` workers;
/// the result does not depend on the thread count.
std::vector<ReducedFraction> enumerate_members(const DigitSet& ds, std::span<const Integer> denominators,
                                               unsigned threads = 1);

/// Every reduced member a/d with d <= T (T < 2^32), sorted by value. Found
/// by one descent through the cylinders of C that prunes any cylinder
/// without a fraction of denominator <= T.
std::vector<ReducedFraction> members_up_to(const DigitSet& ds, std::uint64_t max_denominator,
                                           bool coprime_to_base_only, unsigned threads = 1);

struct MemberCounts {
  std::uint64_t max_denominator = 0;
  bool coprime_to_base_only = false;
  std::uint64_t reduced = 0;                    // distinct values a/d, d <= T
  std::uint64_t reduced_without_endpoints = 0;  // same, excluding 0 and 1
  std::uint64_t all = 0;                        // pairs (a, d), 0 <= a <= d <= T
  std::uint64_t all_without_endpoints = 0;
};

/// Counts members with denominator at most T (T < 2^32). With
/// coprime_to_base_only, only denominators coprime to b count.
MemberCounts count_members(const DigitSet& ds, std::uint64_t max_denominator, bool coprime_to_base_only,
                           unsigned threads = 1);

/// The endpoint-inclusive count selected by reduced_only.
std::uint64_t count_members_up_to(const DigitSet& ds, std::uint64_t max_denominator, bool reduced_only,
                                  bool coprime_to_base_only, unsigned threads = 1);

/// Every S-integer in C(b, D), with the bound that makes the list complete.
struct SIntegerCertificate {
  unsigned base = 0;
  std::vector<unsigned> digits;
  std::vector<Integer> primes;
  Rational epsilon;
  Rational gap_radius;
  Rational bound;                  // D
  Integer max_denominator;         // floor(D)
  std::uint64_t denominators_checked = 0;
  std::vector<ReducedFraction> members;  // sorted; includes 0 and 1 when present
  std::uint64_t count_with_endpoints = 0;
  std::uint64_t count_without_endpoints = 0;
};

/// Checks every S-smooth d <= D. Any reduced S-integer with d > D has an
/// orbit with circular spacing below 2 * epsilon, which the gap of C forbids.
/// Throws PreconditionError when epsilon <= 0, epsilon > ds.gap_radius(),
/// the profile base differs from ds.base(), or floor(D) exceeds the
/// enumeration limit.
SIntegerCertificate enumerate_s_integers(const DigitSet& ds, const OrderProfile& profile, const Rational& epsilon,
                                         unsigned threads = 1);

/// Ascending S-smooth integers in [1, limit].
std::vector<std::uint64_t> smooth_numbers(std::span<const Integer> primes, std::uint64_t limit);

}  // namespace cr
