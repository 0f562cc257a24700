#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "cr/integer.hpp"

namespace cr {

/// An exact rational a/d in [0, 1] kept in lowest terms.
class ReducedFraction {
 public:
  ReducedFraction() = default;

  /// Reduces num/den. Throws PreconditionError unless den >= 1 and
  /// 0 <= num <= den.
  ReducedFraction(Integer num, Integer den);

  /// Parses "a/d" (or "0", "1").
  static ReducedFraction parse(std::string_view text);
  static ReducedFraction from_rational(const Rational& value);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  Rational value() const { return Rational(num_, den_); }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }

  std::string str() const;

  friend bool operator==(const ReducedFraction& a, const ReducedFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ReducedFraction& a, const ReducedFraction& b);

 private:
  Integer num_{0};
  Integer den_{1};
};

}  // namespace cr
