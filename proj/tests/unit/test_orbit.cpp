#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cr/errors.hpp"
#include "cr/orbit.hpp"
#include "oracles.hpp"

namespace cr {
namespace {

ReducedFraction F(unsigned long a, unsigned long d) { return ReducedFraction(Integer(a), Integer(d)); }

std::vector<Integer> primes_of(std::initializer_list<unsigned long> ps) {
  std::vector<Integer> out;
  for (auto p : ps) {
    out.emplace_back(p);
  }
  return out;
}

TEST(ApplyTb, Examples) {
  EXPECT_EQ(apply_tb(3, F(1, 4)), F(3, 4));
  EXPECT_EQ(apply_tb(2, F(5, 9)), F(1, 9));
  EXPECT_EQ(apply_tb(3, F(1, 6)), F(1, 2));
  EXPECT_EQ(apply_tb(7, F(0, 1)), F(0, 1));
  EXPECT_THROW(apply_tb(3, F(1, 1)), PreconditionError);
  EXPECT_THROW(apply_tb(1, F(1, 2)), PreconditionError);
}

TEST(Orbit, Examples) {
  auto o = orbit(2, F(1, 9));
  EXPECT_EQ(o.points, (std::vector{F(1, 9), F(2, 9), F(4, 9), F(8, 9), F(7, 9), F(5, 9)}));
  EXPECT_EQ(o.preperiod, 0U);
  EXPECT_EQ(o.period, 6U);

  o = orbit(2, F(1, 12));
  EXPECT_EQ(o.points, (std::vector{F(1, 12), F(1, 6), F(1, 3), F(2, 3)}));
  EXPECT_EQ(o.preperiod, 2U);
  EXPECT_EQ(o.period, 2U);

  o = orbit(3, F(0, 1));
  EXPECT_EQ(o.points, std::vector{F(0, 1)});
  EXPECT_EQ(o.period, 1U);
}

TEST(Decompose, Examples) {
  const auto two = build_profile(2, primes_of({3}));
  auto dec = decompose(two, F(1, 9));
  EXPECT_EQ(dec.split.d0, 3);
  EXPECT_EQ(dec.split.d1, 3);
  EXPECT_TRUE(dec.sets_equal);
  EXPECT_EQ(dec.a1, (std::vector{F(1, 9), F(2, 9), F(4, 9), F(5, 9), F(7, 9), F(8, 9)}));
  EXPECT_EQ(dec.a2, dec.a1);

  dec = decompose(two, F(1, 3));
  EXPECT_EQ(dec.split.d0, 1);
  EXPECT_EQ(dec.a1, (std::vector{F(1, 3), F(2, 3)}));
  EXPECT_TRUE(dec.sets_equal);

  const auto three = build_profile(3, primes_of({2, 5}));
  dec = decompose(three, F(1, 160));
  EXPECT_EQ(dec.split.d0, 2);
  EXPECT_EQ(dec.order, oracle::order(3, 160));
  EXPECT_EQ(dec.order, 2 * oracle::order(3, 80));
  EXPECT_TRUE(dec.sets_equal);

  EXPECT_THROW(decompose(three, F(1, 21)), PreconditionError);
}

// Orbit of a/d with gcd(d, b) = 1 by direct iteration on numerators.
std::vector<ReducedFraction> brute_orbit(unsigned long b, unsigned long a, unsigned long d) {
  std::set<ReducedFraction> seen;
  unsigned long x = a % d;
  do {
    seen.insert(F(x, d));
    x = x * b % d;
  } while (x != a % d);
  return {seen.begin(), seen.end()};
}

TEST(Decompose, RandomInstancesAgreeWithDirectOrbit) {
  std::mt19937_64 rng(20240601);
  const std::vector<unsigned long> pool = {2, 3, 5, 7, 11, 13};
  int done = 0;
  while (done < 300) {
    const unsigned long b = std::uniform_int_distribution<unsigned long>(2, 10)(rng);
    const unsigned long d = std::uniform_int_distribution<unsigned long>(2, 10000)(rng);
    if (std::gcd(b, d) != 1) {
      continue;
    }
    std::vector<Integer> S;
    for (const auto& [p, e] : oracle::trial_factor(d)) {
      S.emplace_back(p);
    }
    // Pad S with an unused prime now and then to exercise larger N_p.
    for (auto p : pool) {
      if (b % p != 0 && d % p != 0 && rng() % 4 == 0) {
        S.emplace_back(p);
      }
    }
    unsigned long a = std::uniform_int_distribution<unsigned long>(1, d - 1)(rng);
    while (std::gcd(a, d) != 1) {
      a = a % (d - 1) + 1;
    }
    const auto profile = build_profile(Integer(b), S);
    const auto dec = decompose(profile, F(a, d));
    ASSERT_TRUE(dec.sets_equal) << a << "/" << d << " b=" << b;
    ASSERT_EQ(dec.a1, brute_orbit(b, a, d)) << a << "/" << d << " b=" << b;
    ASSERT_EQ(Integer(dec.a1.size()), dec.split.d0 * dec.order_d1);
    ASSERT_EQ(dec.order, oracle::order(b, d));
    ++done;
  }
}

TEST(CoverRadius, Examples) {
  const auto o = orbit(2, F(1, 9));
  auto r = density_report(o.points, Rational(1, 9));
  EXPECT_EQ(r.cover_radius, Rational(1, 9));
  EXPECT_TRUE(r.is_dense);

  r = density_report({F(0, 1)}, Rational(1));
  EXPECT_EQ(r.cover_radius, 1);
  EXPECT_TRUE(r.is_dense);

  r = density_report({F(1, 2), F(0, 1), F(1, 2)}, Rational(1, 5));
  EXPECT_EQ(r.points.size(), 2U);
  EXPECT_EQ(r.cover_radius, Rational(1, 2));
  EXPECT_FALSE(r.is_dense);

  EXPECT_EQ(cover_radius(std::vector{F(1, 3), F(2, 3)}), Rational(1, 3));
  EXPECT_THROW(density_report({}, Rational(1, 2)), PreconditionError);
}

TEST(DensityBound, Examples) {
  EXPECT_EQ(density_bound(build_profile(2, primes_of({3})), Rational(1, 6)), 9);
  EXPECT_EQ(density_bound(build_profile(3, primes_of({2, 5})), Rational(1, 6)), 240);
  EXPECT_EQ(density_bound(build_profile(2, primes_of({3})), Rational(1, 2)), 3);
  EXPECT_EQ(density_bound(build_profile(3, primes_of({2, 5})), Rational(80, 2)), 1);
  EXPECT_THROW(density_bound(build_profile(2, primes_of({3})), Rational(0)), PreconditionError);
}

// Every reduced a/d with d > D has an epsilon-dense orbit, checked for
// several profiles well past D.
TEST(DensityBound, OrbitsBeyondBoundAreDense) {
  struct Case {
    unsigned long b;
    std::vector<Integer> S;
    Rational eps;
  };
  const std::vector<Case> cases = {
      {2, primes_of({3}), Rational(1, 6)},
      {3, primes_of({2, 5}), Rational(1, 6)},
      {10, primes_of({3, 7}), Rational(1, 4)},
      {5, primes_of({2, 3}), Rational(1, 3)},
  };
  for (const auto& c : cases) {
    const auto profile = build_profile(Integer(c.b), c.S);
    const Rational D = density_bound(profile, c.eps);
    for (unsigned long d = 2; d <= 4000; ++d) {
      unsigned long rest = d;
      for (const auto& p : c.S) {
        while (rest % p.get_ui() == 0) {
          rest /= p.get_ui();
        }
      }
      if (rest != 1 || Rational(d) <= D) {
        continue;
      }
      // Each cycle of x -> b x mod d is one orbit. The spacing argument
      // bounds gaps on the circle R/Z, so the wrap-around gap counts as one
      // gap here (see ClosedIntervalCanFailAtTheEnds).
      std::vector<char> seen(d, 0);
      for (unsigned long a = 1; a < d; ++a) {
        if (seen[a] || std::gcd(a, d) != 1) {
          continue;
        }
        std::vector<unsigned long> xs;
        unsigned long x = a;
        do {
          seen[x] = 1;
          xs.push_back(x);
          x = x * c.b % d;
        } while (x != a);
        std::sort(xs.begin(), xs.end());
        Rational radius(xs.front() + d - xs.back(), 2 * d);
        for (std::size_t i = 1; i < xs.size(); ++i) {
          radius = std::max(radius, Rational(xs[i] - xs[i - 1], 2 * d));
        }
        ASSERT_LT(radius, c.eps) << a << "/" << d << " b=" << c.b;
      }
    }
  }
}

// On the closed interval the end gaps [0, min] and [max, 1] are not halved,
// so d > D does not force eps-density there: b = 5, S = {2, 3}, eps = 1/3
// gives D = 36, yet the orbit {1, 5, 25, 29}/48 leaves 19/48 uncovered at 1.
TEST(DensityBound, ClosedIntervalCanFailAtTheEnds) {
  const Rational eps(1, 3);
  EXPECT_EQ(density_bound(build_profile(5, primes_of({2, 3})), eps), 36);
  const auto r = density_report(orbit(5, F(1, 48)).points, eps);
  EXPECT_EQ(r.cover_radius, Rational(19, 48));
  EXPECT_FALSE(r.is_dense);
}

TEST(CoprimePart, Examples) {
  EXPECT_EQ(coprime_part(12, 2), 3);
  EXPECT_EQ(coprime_part(35, 6), 35);
  EXPECT_EQ(coprime_part(180, 10), 9);
}

TEST(ExtendPrimeSet, Examples) {
  EXPECT_EQ(extend_prime_set(primes_of({3}), 10, 2), primes_of({3, 5}));
  EXPECT_EQ(extend_prime_set(primes_of({2, 5}), 1, 3), primes_of({2, 5}));
  EXPECT_EQ(extend_prime_set(primes_of({3}), 21, 2), primes_of({3, 7}));
}

}  // namespace
}  // namespace cr
