#pragma once

// Lower bound for sup_x dist(x, C(b, D)) from a uniform grid.
//
// C is contained in C_L, the union over D-digit prefixes of length L of the
// hulls [0.w + min C / b^L, 0.w + max C / b^L], so dist(x, C_L) <= dist(x, C)
// and the grid maximum of dist(x, C_L) never exceeds the true sup.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace cr::oracle {

inline mpq_class grid_sup_distance_lower_bound(unsigned b, const std::vector<unsigned>& digits, unsigned grid_log2) {
  std::vector<unsigned> ds = digits;
  std::sort(ds.begin(), ds.end());
  const mpq_class lo_c(ds.front(), b - 1);
  const mpq_class hi_c(ds.back(), b - 1);

  // Truncate at the first L with b^L >= 4 * grid size.
  unsigned L = 0;
  std::uint64_t bl = 1;
  while (bl < (std::uint64_t{4} << grid_log2)) {
    bl *= b;
    ++L;
  }
  std::vector<std::uint64_t> prefixes = {0};
  for (unsigned level = 0; level < L; ++level) {
    std::vector<std::uint64_t> next;
    next.reserve(prefixes.size() * ds.size());
    for (auto v : prefixes) {
      for (unsigned g : ds) {
        next.push_back(v * b + g);
      }
    }
    prefixes.swap(next);
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), b, L);
  std::vector<std::pair<mpq_class, mpq_class>> hulls;
  hulls.reserve(prefixes.size());
  for (auto v : prefixes) {
    mpq_class left = (mpq_class(mpz_class(static_cast<unsigned long>(v))) + lo_c) / scale;
    mpq_class right = (mpq_class(mpz_class(static_cast<unsigned long>(v))) + hi_c) / scale;
    left.canonicalize();
    right.canonicalize();
    hulls.emplace_back(left, right);
  }
  std::sort(hulls.begin(), hulls.end());

  const std::uint64_t n = std::uint64_t{1} << grid_log2;
  mpq_class best = 0;
  std::size_t j = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    mpq_class x(static_cast<unsigned long>(k), static_cast<unsigned long>(n));
    x.canonicalize();
    while (j + 1 < hulls.size() && hulls[j + 1].first <= x) {
      ++j;
    }
    // hulls[j] is the last hull starting at or before x (or the first one).
    mpq_class dist;
    if (x < hulls[j].first) {
      dist = hulls[j].first - x;
    } else if (x <= hulls[j].second) {
      dist = 0;
    } else {
      dist = x - hulls[j].second;
      if (j + 1 < hulls.size()) {
        mpq_class right_gap = hulls[j + 1].first - x;
        if (right_gap < dist) {
          dist = right_gap;
        }
      }
    }
    if (dist > best) {
      best = dist;
    }
  }
  return best;
}

}  // namespace cr::oracle
