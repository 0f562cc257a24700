#include <gtest/gtest.h>

#include <random>

#include "cr/errors.hpp"
#include "cr/numtheory.hpp"
#include "oracles.hpp"

namespace cr {
namespace {

Integer I(unsigned long v) { return Integer(v); }

std::vector<std::pair<Integer, unsigned long>> pairs(const Factorization& f) {
  std::vector<std::pair<Integer, unsigned long>> out;
  for (const auto& [p, e] : f.factors()) {
    out.emplace_back(p, e);
  }
  return out;
}

TEST(Factorize, SmallExamples) {
  EXPECT_TRUE(factorize(1).is_one());
  EXPECT_EQ(factorize(1).value(), 1);
  using V = std::vector<std::pair<Integer, unsigned long>>;
  EXPECT_EQ(pairs(factorize(360)), (V{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(pairs(factorize(1000000007)), (V{{1000000007, 1}}));
}

TEST(Factorize, MatchesTrialDivisionUpTo1e5) {
  for (unsigned long n = 1; n <= 100000; ++n) {
    const auto expected = oracle::trial_factor(n);
    const auto got = factorize(I(n));
    ASSERT_EQ(got.factors().size(), expected.size()) << n;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      ASSERT_EQ(got.factors()[i].prime, I(expected[i].first)) << n;
      ASSERT_EQ(got.factors()[i].exponent, expected[i].second) << n;
    }
  }
}

TEST(Factorize, LargeCompositesNeedRho) {
  // 2^64 + 1 = 274177 * 67280421310721
  Integer f1 = I(274177);
  Integer f2("67280421310721");
  Integer n = f1 * f2;
  auto got = factorize(n);
  ASSERT_EQ(got.factors().size(), 2U);
  EXPECT_EQ(got.factors()[0].prime, f1);
  EXPECT_EQ(got.factors()[1].prime, f2);

  // Two primes above the trial-division range.
  const Integer p("2305843009213693951");  // 2^61 - 1
  const Integer q("1000000007");
  got = factorize(p * p * q);
  ASSERT_EQ(got.factors().size(), 2U);
  EXPECT_EQ(got.factors()[0].prime, q);
  EXPECT_EQ(got.factors()[1].prime, p);
  EXPECT_EQ(got.factors()[1].exponent, 2U);
  EXPECT_EQ(got.value(), p * p * q);
}

TEST(Factorize, RejectsNonPositive) {
  EXPECT_THROW(factorize(0), PreconditionError);
  EXPECT_THROW(factorize(-6), PreconditionError);
}

TEST(Factorization, FromFactorsMergesAndValidates) {
  const auto f = Factorization::from_factors({{3, 1}, {2, 2}, {3, 1}, {7, 0}});
  EXPECT_EQ(f.value(), 36);
  EXPECT_EQ(f.exponent_of(3), 2U);
  EXPECT_EQ(f.exponent_of(7), 0U);
  EXPECT_EQ(f.radical(), 6);
  EXPECT_EQ(f.largest_prime(), 3);
  EXPECT_THROW(Factorization::from_factors({{4, 1}}), PreconditionError);
  EXPECT_THROW(Factorization().largest_prime(), PreconditionError);
}

TEST(IsPrime, AgreesWithTrialDivision) {
  for (unsigned long n = 0; n < 20000; ++n) {
    ASSERT_EQ(is_prime(I(n)), oracle::is_prime(n)) << n;
  }
  EXPECT_FALSE(is_prime(561));
  EXPECT_FALSE(is_prime(Integer("3825123056546413051")));  // strong pseudoprime to bases 2..23
  EXPECT_TRUE(is_prime(Integer("618970019642690137449562111")));  // 2^89 - 1
}

TEST(Valuation, Examples) {
  EXPECT_EQ(vp(I(48), I(2)), 4U);
  EXPECT_EQ(vp(I(80), I(5)), 1U);
  EXPECT_EQ(vp(I(7), I(3)), 0U);
  EXPECT_THROW(vp(I(0), I(2)), PreconditionError);
  EXPECT_EQ(vp(Rational(3, 40), I(2)), -3);
  EXPECT_EQ(vp(Rational(50, 3), I(5)), 2);
}

TEST(Valuation, AdditiveOnProducts) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<unsigned long> dist(1, 1000000);
  for (int i = 0; i < 2000; ++i) {
    const unsigned long m = dist(rng);
    const unsigned long n = dist(rng);
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
      ASSERT_EQ(vp(Integer(I(m) * I(n)), I(p)), vp(I(m), I(p)) + vp(I(n), I(p)));
      ASSERT_EQ(vp(I(m), I(p)), oracle::valuation(m, p));
    }
  }
}

TEST(RadicalAndLargestPrime, Examples) {
  EXPECT_EQ(radical(360), 30);
  EXPECT_EQ(largest_prime(360), 5);
  EXPECT_EQ(radical(13), 13);
  EXPECT_THROW(largest_prime(1), PreconditionError);
}

TEST(ModPow, Examples) {
  EXPECT_EQ(mod_pow(3, 2, 8), 1);
  EXPECT_EQ(mod_pow(2, 6, 9), 1);
  EXPECT_EQ(mod_pow(17, 0, 5), 1);
  EXPECT_EQ(mod_pow(17, 0, 1), 0);
  EXPECT_EQ(mod_pow(-2, 3, 7), 6);
}

TEST(Order, Examples) {
  EXPECT_EQ(mult_order_bruteforce(3, 8), 2);
  EXPECT_EQ(mult_order_bruteforce(2, 9), 6);
  EXPECT_EQ(mult_order_bruteforce(5, 1), 1);
  EXPECT_EQ(mult_order_fast(2, 243, Factorization::from_factors({{2, 1}, {3, 4}})), 162);
  EXPECT_EQ(mult_order_fast(3, 5, Factorization::from_factors({{2, 2}})), 4);
  EXPECT_EQ(mult_order_fast(1, 97, Factorization::from_factors({{2, 5}, {3, 1}})), 1);
  EXPECT_EQ(mult_order(2, 243), 162);
}

TEST(Order, Errors) {
  EXPECT_THROW(mult_order_bruteforce(6, 9), PreconditionError);
  EXPECT_THROW(mult_order(10, 4), PreconditionError);
  // 2^3 != 1 mod 9, so 3 is not a multiple of the order.
  EXPECT_THROW(mult_order_fast(2, 9, Factorization::from_factors({{3, 1}})), PreconditionError);
}

TEST(Order, FastMatchesBruteForceUpTo1e4) {
  std::mt19937_64 rng(11);
  for (unsigned long m = 1; m <= 10000; ++m) {
    std::uniform_int_distribution<unsigned long> pick(1, m + 50);
    for (int trial = 0; trial < 3; ++trial) {
      unsigned long b = pick(rng);
      while (std::gcd(b, m) != 1) {
        ++b;
      }
      const unsigned long expected = oracle::order(b, m);
      ASSERT_EQ(mult_order(I(b), I(m)), expected) << b << " mod " << m;
      ASSERT_EQ(mult_order_bruteforce(I(b), I(m)), expected) << b << " mod " << m;
    }
  }
}

TEST(Order, LargeModulus) {
  // ord(2, 2^61 - 1) = 61; ord(10, 10^9+7) divides 10^9+6.
  EXPECT_EQ(mult_order(2, Integer("2305843009213693951")), 61);
  const Integer m("1000000007");
  const Integer k = mult_order(10, m);
  EXPECT_EQ(mod_pow(10, k, m), 1);
  EXPECT_EQ(Integer(m - 1) % k, 0);
}

TEST(OrderOfPower, Examples) {
  EXPECT_EQ(order_of_power(12, 8), 3);
  EXPECT_EQ(order_of_power(12, 1), 12);
  EXPECT_EQ(order_of_power(6, 6), 1);
}

TEST(OrderOfPower, MatchesDirectOrder) {
  // 3 generates (Z/7)^x and (Z/17)^x; 2 has order 11 mod 23.
  for (auto [g, m] : {std::pair{3UL, 7UL}, {3UL, 17UL}, {2UL, 23UL}, {10UL, 101UL}}) {
    const unsigned long s = oracle::order(g, m);
    for (unsigned long t = 1; t <= 3 * s; ++t) {
      unsigned long gt = 1;
      for (unsigned long i = 0; i < t; ++i) {
        gt = gt * g % m;
      }
      ASSERT_EQ(order_of_power(I(s), I(t)), oracle::order(gt, m)) << g << "^" << t << " mod " << m;
    }
  }
}

TEST(UnitGroupExponent, Examples) {
  EXPECT_EQ(unit_group_exponent(I(7), 2), 42);
  EXPECT_EQ(unit_group_exponent(I(2), 5), 8);
  EXPECT_EQ(unit_group_exponent(I(2), 2), 2);
  EXPECT_EQ(unit_group_exponent(I(2), 1), 1);
  EXPECT_EQ(unit_group_exponent(Factorization::from_factors({{2, 3}, {5, 1}})).value(), 4);
}

TEST(UnitGroupExponent, KillsEveryUnitAndIsAttainedForOddPrimes) {
  for (unsigned long p = 2; p <= 10000; ++p) {
    if (!oracle::is_prime(p)) {
      continue;
    }
    for (unsigned long n = 1, q = p; q <= 10000; ++n, q *= p) {
      const unsigned long lambda = to_u64(unit_group_exponent(I(p), n));
      const auto lambda_primes = oracle::trial_factor(lambda);
      bool witness = false;
      for (unsigned long b = 1; b < q; ++b) {
        if (b % p == 0) {
          continue;
        }
        ASSERT_EQ(oracle::power_mod(b, lambda, q), 1U) << b << " mod " << q;
        if (!witness) {
          witness = std::all_of(lambda_primes.begin(), lambda_primes.end(), [&](const auto& r) {
            return oracle::power_mod(b, lambda / r.first, q) != 1;
          });
        }
      }
      if (p != 2) {
        ASSERT_TRUE(witness) << "no unit of order " << lambda << " mod " << q;
      }
    }
  }
}

}  // namespace
}  // namespace cr
