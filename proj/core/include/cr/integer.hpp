#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cr {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer from_u64(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 assumed");
  return Integer(static_cast<unsigned long>(v));
}

bool fits_u64(const Integer& v);

// Throws PreconditionError when v is negative or wider than 64 bits.
std::uint64_t to_u64(const Integer& v);

std::string to_string(const Integer& v);

// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& v);

// Parses a decimal integer. Leading '+' is rejected.
Integer parse_integer(std::string_view text);

// Parses "p/q" or "p". Decimal points and exponents are rejected so that
// every quantity entering a certificate is exact.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& v);

}  // namespace cr
