#include "cr/fraction.hpp"

#include "cr/errors.hpp"

namespace cr {

ReducedFraction::ReducedFraction(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ < 1) {
    throw PreconditionError("denominator must be >= 1, got " + den_.get_str());
  }
  if (num_ < 0 || num_ > den_) {
    throw PreconditionError("fraction " + num_.get_str() + "/" + den_.get_str() + " is outside [0, 1]");
  }
  const Integer g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

ReducedFraction ReducedFraction::parse(std::string_view text) {
  const Rational r = parse_rational(text);
  return ReducedFraction(r.get_num(), r.get_den());
}

ReducedFraction ReducedFraction::from_rational(const Rational& value) {
  return ReducedFraction(value.get_num(), value.get_den());
}

std::string ReducedFraction::str() const { return num_.get_str() + "/" + den_.get_str(); }

std::strong_ordering operator<=>(const ReducedFraction& a, const ReducedFraction& b) {
  const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) {
    return std::strong_ordering::less;
  }
  if (c > 0) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace cr
