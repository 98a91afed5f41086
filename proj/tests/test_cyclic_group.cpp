#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "zsf/cyclic_group.hpp"

using namespace zsf;

namespace {

// Oracle: count u in [1, n] with gcd(u, n) == 1 by direct scan.
std::uint64_t totient_by_scan(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t u = 1; u <= n; ++u)
    if (std::gcd(u, n) == 1) ++count;
  return count;
}

}  // namespace

TEST(CyclicGroup, Add) {
  const CyclicGroup c8(8), c3(3);
  EXPECT_EQ(c8.add(1, 7), 0u);
  EXPECT_EQ(c8.add(3, 6), 1u);
  EXPECT_EQ(c3.add(2, 2), 1u);
  EXPECT_EQ(c8.add(0, 0), 0u);
}

TEST(CyclicGroup, AddNearWordLimit) {
  const CyclicGroup big(~std::uint64_t{0});
  EXPECT_EQ(big.add(big.order() - 1, big.order() - 1), big.order() - 2);
}

TEST(CyclicGroup, ScalarMul) {
  const CyclicGroup c8(8);
  EXPECT_EQ(c8.scalar_mul(3, 3), 1u);   // 3 * 3 = 9 = 1 in C_8
  EXPECT_EQ(c8.scalar_mul(2, 1), 2u);
  EXPECT_EQ(c8.scalar_mul(0, 5), 0u);
  EXPECT_EQ(CyclicGroup(101).scalar_mul(0, 57), 0u);
  EXPECT_EQ(c8.scalar_mul(17, 3), 3u);  // 51 = 3 mod 8
}

TEST(CyclicGroup, RejectsZeroOrder) { EXPECT_THROW(CyclicGroup(0), std::invalid_argument); }

TEST(Totient, Examples) {
  EXPECT_EQ(totient(8), 4u);
  EXPECT_EQ(totient(1), 1u);
  EXPECT_EQ(totient(12), totient_by_scan(12));
  EXPECT_EQ(totient(12), 4u);
  EXPECT_EQ(totient(101), 100u);
  EXPECT_THROW(totient(0), std::invalid_argument);
}

TEST(Totient, MatchesScanUpTo2000) {
  for (std::uint64_t n = 1; n <= 2000; ++n) ASSERT_EQ(totient(n), totient_by_scan(n)) << n;
}

TEST(Totient, LargePrimeAndPrimePower) {
  EXPECT_EQ(totient(1000000007), 1000000006u);
  EXPECT_EQ(totient(1u << 20), 1u << 19);
}

TEST(Generators, Examples) {
  EXPECT_EQ(CyclicGroup(8).generators(), (std::vector<Residue>{1, 3, 5, 7}));
  EXPECT_EQ(CyclicGroup(2).generators(), (std::vector<Residue>{1}));
  EXPECT_EQ(CyclicGroup(9).generators(), (std::vector<Residue>{1, 2, 4, 5, 7, 8}));
  EXPECT_TRUE(CyclicGroup(1).generators().empty());
}

TEST(Generators, CountEqualsTotientOnSample) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(2, 1000000);
  std::vector<std::uint64_t> sample{2, 3, 4, 1000000};
  for (int i = 0; i < 20; ++i) sample.push_back(dist(rng));
  for (auto n : sample) EXPECT_EQ(CyclicGroup(n).generators().size(), totient(n)) << n;
}

TEST(Totient, MultiplicativeOnCoprimePairs) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint64_t> dist(1, 100000);
  int checked = 0;
  while (checked < 500) {
    const auto a = dist(rng), b = dist(rng);
    if (std::gcd(a, b) != 1) continue;
    ASSERT_EQ(totient(a * b), totient(a) * totient(b)) << a << " * " << b;
    ++checked;
  }
}
