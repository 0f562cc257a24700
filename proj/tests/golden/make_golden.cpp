// Writes bounds_c3_02_1e5.json: empirical-constant minima over every
// reduced member a/d of C(3, {0, 2}) with gcd(d, 3) = 1, d <= 10^5 and
// eps d >= 3 (eps = 1/6). Membership comes from the visited-bitmap coset
// scan and the constants from direct evaluation, without the library.
//
//   cr_make_golden > tests/golden/bounds_c3_02_1e5.json

#include <cmath>
#include <cstdio>
#include <iostream>
#include <nlohmann/json.hpp>

#include "oracles.hpp"

namespace {

using cr::oracle::u64;

struct Best {
  double value = 0;
  u64 a = 0;
  u64 d = 0;
  bool set = false;

  // Ties go to the smaller fraction a/d.
  void offer(double v, u64 na, u64 nd, bool maximize) {
    const bool better = !set || (maximize ? v > value : v < value) ||
                        (v == value && static_cast<unsigned __int128>(na) * d < static_cast<unsigned __int128>(a) * nd);
    if (better) {
      value = v;
      a = na;
      d = nd;
      set = true;
    }
  }

  nlohmann::ordered_json json(const char* name) const {
    return {{name, value}, {"fraction", std::to_string(a) + "/" + std::to_string(d)}};
  }
};

}  // namespace

int main() {
  constexpr u64 kBase = 3;
  constexpr u64 kMaxDen = 100000;
  constexpr double kEps = 1.0 / 6;
  const auto allowed = cr::oracle::mask(kBase, {0, 2});

  Best k_emp, c_rad, c_p, log_ratio;
  u64 members = 0;
  u64 reports = 0;
  for (u64 d = 2; d <= kMaxDen; ++d) {
    if (d % kBase == 0) {
      continue;
    }
    const auto numerators = cr::oracle::coset_scan(kBase, allowed, d);
    members += numerators.size();
    if (d < 18) {  // eps d < 3
      continue;
    }
    const auto factors = cr::oracle::trial_factor(d);
    double P = static_cast<double>(factors.back().first);
    double rad = 1;
    for (const auto& f : factors) {
      rad *= static_cast<double>(f.first);
    }
    const double x = std::log(2 * kEps * static_cast<double>(d));
    const double log_b = std::log(static_cast<double>(kBase));
    const double log_d = std::log(static_cast<double>(d));
    const double rhs = P > kBase ? std::sqrt(x * std::log(x) / log_b) : std::sqrt(x / log_b);
    for (u64 a : numerators) {
      ++reports;
      k_emp.offer(P / rhs, a, d, false);
      c_rad.offer(rad / log_d, a, d, false);
      c_p.offer(P / std::sqrt(log_d * std::log(log_d)), a, d, false);
      log_ratio.offer(x * std::log(P) / (P * P * log_b), a, d, true);
    }
  }

  nlohmann::ordered_json out = {
      {"base", kBase},
      {"digits", {0, 2}},
      {"epsilon", "1/6"},
      {"max_denominator", kMaxDen},
      {"filter", "gcd(a*b, d) = 1 and eps*d >= 3"},
      {"members_coprime_to_base", members + 2},
      {"reports", reports},
      {"K_emp_min", k_emp.json("value")},
      {"c_emp_rad_min", c_rad.json("value")},
      {"c_emp_P_min", c_p.json("value")},
      {"log_ratio_max", log_ratio.json("value")},
  };
  std::cout << out.dump(2) << "\n";
}
