#include <gtest/gtest.h>

#include <cmath>

#include "zsf/bounds.hpp"
#include "zsf/structure.hpp"

using namespace zsf;

TEST(Statistic, Names) {
  EXPECT_TRUE(Statistic::total().is_total());
  EXPECT_FALSE(Statistic::by_d(2).is_total());
  EXPECT_NE(Statistic::total().name(), Statistic::by_d(2).name());
}

TEST(AEll, Values) {
  EXPECT_NEAR(a_ell(1), 8.0, 1e-12);
  EXPECT_NEAR(a_ell(2), 64.0 * std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(a_ell(3), 512.0 * std::sqrt(6.0), 1e-8);
  EXPECT_THROW(a_ell(0), std::out_of_range);
}

TEST(KimVu, ThresholdAndProbability) {
  const KimVuParams params{2, 3.0, 101, 4.0, 9.0};
  EXPECT_NEAR(kim_vu_threshold(params), a_ell(2) * 6.0 * 9.0, 1e-8);
  const auto tb = kim_vu_failure_prob(params);
  EXPECT_NEAR(tb.probability, 2.0 * std::exp(-1.0) * 101.0, 1e-9);
  EXPECT_TRUE(tb.vacuous);
  EXPECT_THROW(kim_vu_threshold({2, 1.0, 101, 1.0, 1.0}), std::out_of_range);
  EXPECT_THROW(kim_vu_failure_prob({2, 0.5, 101, 1.0, 1.0}), std::out_of_range);
}

TEST(KimVu, ProbabilityAtDLogN) {
  for (std::uint64_t n : {11, 101, 1009, 100003})
    for (std::uint64_t d = 1; d <= 6; ++d) {
      const double lambda = static_cast<double>(d) * std::log(static_cast<double>(n));
      if (lambda <= 1) continue;
      const auto tb = kim_vu_failure_prob({d, lambda, n, 1.0, 1.0});
      const double expected = 2.0 * std::exp(2.0) / static_cast<double>(n);
      ASSERT_NEAR(tb.probability / expected, 1.0, 1e-9) << n << "," << d;
    }
}

TEST(Chernoff, ValuesAndErrors) {
  const auto tb = chernoff_tail(30.0, 0.5);
  EXPECT_NEAR(tb.probability, 2.0 * std::exp(-2.5), 1e-12);
  EXPECT_FALSE(tb.vacuous);
  EXPECT_TRUE(chernoff_tail(30.0, 0.1).vacuous);
  EXPECT_THROW(chernoff_tail(30.0, 0.0), std::out_of_range);
  EXPECT_THROW(chernoff_tail(30.0, 1.0), std::out_of_range);
  EXPECT_THROW(chernoff_tail(0.0, 0.5), std::out_of_range);
}

TEST(EBounds, Examples) {
  const Rational p(3, 10);
  EXPECT_EQ(e_d1_bound(3, 2, Rational(1)), Rational(17));
  EXPECT_EQ(e_d1_bound(3, 2, p), Rational(51, 10));
  EXPECT_EQ(e_d1_bound(2, 2, Rational(1)), Rational(7));
  EXPECT_EQ(e_d1_bound(2, 1, p), Rational(1));
  EXPECT_EQ(e_di_bound(3, 3, 2, Rational(1)), Rational(36));
  EXPECT_EQ(e_di_bound(2, 2, 1, Rational(1)), Rational(12));
  EXPECT_EQ(e_di_bound(3, 3, 3, p), Rational(1));
}

TEST(EBounds, Errors) {
  const Rational p(1, 2);
  EXPECT_THROW(e_d1_bound(2, 0, p), std::out_of_range);
  EXPECT_THROW(e_d1_bound(2, 3, p), std::out_of_range);
  EXPECT_THROW(e_di_bound(3, 2, 0, p), std::out_of_range);
  EXPECT_THROW(e_di_bound(3, 2, 3, p), std::out_of_range);
  EXPECT_THROW(e_di_bound(3, 4, 2, p), std::out_of_range);
  EXPECT_THROW(e_d1_bound(3, 2, Rational(2)), std::out_of_range);
}

TEST(EBounds, MonotoneInP) {
  for (std::uint64_t k = 1; k <= 15; ++k)
    for (std::uint64_t d = 2; d <= d_max(k); ++d)
      for (std::uint64_t i = 1; i <= d; ++i) {
        Rational prev = -1;
        for (int s = 0; s <= 10; ++s) {
          const Rational cur = i == 1 ? e_d1_bound(k, d, Rational(s, 10)) : e_di_bound(k, d, i, Rational(s, 10));
          ASSERT_GE(cur, prev) << k << "," << d << "," << i;
          prev = cur;
        }
      }
}

TEST(Chain, C8Total) {
  const Rational p(3, 10);
  const auto chain = e_prime_and_star(CyclicGroup(8), 2, Statistic::total(), p);
  EXPECT_EQ(chain.ell, 2u);
  ASSERT_EQ(chain.e_by_i.size(), 2u);
  EXPECT_EQ(chain.e_by_i[0], 1 + 7 * p);
  EXPECT_EQ(chain.e_by_i[1], Rational(1));
  EXPECT_EQ(chain.e_prime, 1 + 7 * p);
  EXPECT_EQ(chain.expectation, Rational(57, 25));
  EXPECT_EQ(chain.e_star, Rational(31, 10));
}

TEST(Chain, ByDAndStarIsMax) {
  const Rational p(3, 10);
  const auto chain = e_prime_and_star(CyclicGroup(101), 2, Statistic::by_d(2), p);
  EXPECT_EQ(chain.ell, 2u);
  EXPECT_EQ(chain.e_by_i[0], 7 * p);
  EXPECT_EQ(chain.e_by_i[1], Rational(1));
  EXPECT_EQ(chain.e_prime, Rational(21, 10));
  EXPECT_EQ(chain.expectation, Rational(27));
  EXPECT_EQ(chain.e_star, Rational(27));
  for (std::uint64_t n : {13, 40, 101})
    for (std::uint64_t k = 0; k <= 8 && k <= n / 3; ++k) {
      const auto c = e_prime_and_star(CyclicGroup(n), k, Statistic::total(), Rational(1, 4));
      ASSERT_EQ(c.e_star, std::max(c.e_prime, c.expectation));
      for (const auto& e : c.e_by_i) ASSERT_LE(e, c.e_prime);
    }
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}
