#pragma once

// Word-sized modular helpers for the hot loops. Products go through
// unsigned __int128, so any modulus below 2^64 is safe.

#include <cstdint>
#include <numeric>

namespace cr::detail {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) {
    return 0;
  }
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) {
      result = mulmod(result, base, m);
    }
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Smallest k >= 1 with b^k = 1 (mod m), by stepping. gcd(b, m) = 1 is the
// caller's job; m = 1 gives 1.
inline u64 order_by_stepping(u64 b, u64 m) {
  if (m == 1) {
    return 1;
  }
  const u64 step = b % m;
  u64 x = step;
  u64 k = 1;
  while (x != 1) {
    x = mulmod(x, step, m);
    ++k;
  }
  return k;
}

}  // namespace cr::detail
