#pragma once

// Empirical constants for the largest-prime-divisor and radical lower
// bounds on denominators of rationals in non-dense T_b-invariant sets.
// The constants in those bounds are existential; nothing here asserts a
// value for them. Reports measure the largest constants the data allows.
//
// Logarithms are natural and evaluated in double precision.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cr/fraction.hpp"
#include "cr/integer.hpp"
#include "cr/orders.hpp"

namespace cr {

inline constexpr double kLogTolerance = 1e-9;

enum class Branch { kPrimeAboveBase, kPrimeBelowBase };

std::string_view to_string(Branch branch);

struct BoundReport {
  ReducedFraction fraction;
  Integer base;
  Rational epsilon;
  Integer largest_prime;  // P(d)
  Integer radical;        // rad(d)
  Branch branch = Branch::kPrimeAboveBase;
  double lhs = 0;         // P(d)
  double rhs = 0;         // the bound without its constant
  double k_emp = 0;       // P(d) / rhs
  double c_emp_rad = 0;   // rad(d) / log d
  double c_emp_p = 0;     // P(d) / sqrt(log d * log log d)
  double log_ratio = 0;   // log(2 eps d) * log P / (P^2 log b)
};

/// Report for a/d against
///   P(d) >= K sqrt(log(2 eps d) log log(2 eps d) / log b)   if P(d) > b
///   P(d) >= K sqrt(log(2 eps d) / log b)                      if P(d) < b.
/// Returns nullopt when eps * d < 3. Throws PreconditionError when
/// gcd(a b, d) != 1, b < 2 or eps <= 0.
std::optional<BoundReport> bound_report(const Integer& base, const Rational& epsilon, const ReducedFraction& x);

struct ConstantSummary {
  std::size_t count = 0;
  double k_emp_min = 0;
  double c_emp_rad_min = 0;
  double c_emp_p_min = 0;
  double log_ratio_max = 0;
  ReducedFraction k_emp_argmin;
  ReducedFraction c_emp_rad_argmin;
  ReducedFraction c_emp_p_argmin;
  ReducedFraction log_ratio_argmax;
};

/// Minima (and the log-ratio maximum) over the reports. Ties go to the
/// smaller fraction, so the result does not depend on input order. Throws
/// PreconditionError for an empty input.
ConstantSummary aggregate_constants(std::span<const BoundReport> reports);

/// Combines two summaries of disjoint report sets.
ConstantSummary merge(const ConstantSummary& a, const ConstantSummary& b);

struct ThresholdSlack {
  Integer prime;
  unsigned long n = 0;
  double n_bound = 0;  // max{3, 2 p log b / log p}
  unsigned long N = 0;
  double N_bound = 0;  // n_p + max_q n_q log q / log p
  double n_slack = 0;
  double N_slack = 0;
};

struct ThresholdCheck {
  bool pass = true;
  std::vector<ThresholdSlack> rows;
};

/// Checks the explicit forms of n_p << p log b / log p and
/// N_p << (p + P) log b / log p obtained from v_p(x) <= log x / log p.
ThresholdCheck threshold_bounds_check(const OrderProfile& profile);

}  // namespace cr
