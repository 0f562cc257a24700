#include "cr/integer.hpp"

#include <cctype>

#include "cr/errors.hpp"

namespace cr {

bool fits_u64(const Integer& v) { return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const Integer& v) {
  if (!fits_u64(v)) {
    throw PreconditionError("integer " + v.get_str() + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) {
    return v.get_num().get_str();
  }
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

bool is_decimal(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && s[0] == '-') {
    i = 1;
  }
  if (i == s.size()) {
    return false;
  }
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text)) {
    throw PreconditionError("not a decimal integer: '" + std::string(text) + "'");
  }
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_decimal(text)) {
      throw PreconditionError("not an exact rational (expected p/q): '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_decimal(num) || !is_decimal(den)) {
    throw PreconditionError("not an exact rational (expected p/q): '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) {
    throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

Integer floor(const Rational& v) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return q;
}

}  // namespace cr
