#include <gtest/gtest.h>

#include "zsf/random_model.hpp"

using namespace zsf;

namespace {

using Words = std::array<std::uint32_t, 4>;

SubsetCount brute_count(const CyclicGroup& g, std::uint64_t k, const SubsetSample& sample) {
  SubsetCount out;
  out.total = 0;
  for (const auto& seq : brute_force_enumerate(g, g.order() - 1 - k)) {
    bool inside = true;
    for (auto a : seq.support()) inside = inside && sample.contains(a);
    if (!inside) continue;
    out.total += 1;
    out.by_d[seq.distinct_count()] += 1;
  }
  return out;
}

}  // namespace

TEST(Philox, KnownAnswers) {
  EXPECT_EQ(philox4x32({0, 0, 0, 0}, {0, 0}), (Words{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (Words{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (Words{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(UniformWord, PureFunctionOfInputs) {
  EXPECT_EQ(uniform_word(42, 7, 3), uniform_word(42, 7, 3));
  EXPECT_NE(uniform_word(42, 7, 3), uniform_word(42, 7, 4));
  EXPECT_NE(uniform_word(42, 7, 3), uniform_word(42, 8, 3));
  EXPECT_NE(uniform_word(42, 7, 3), uniform_word(43, 7, 3));
}

TEST(Threshold, Quantization) {
  BernoulliThreshold half(Rational(1, 2));
  EXPECT_EQ(half.threshold(), std::uint64_t{1} << 63);
  EXPECT_EQ(half.quantized(), Rational(1, 2));
  EXPECT_FALSE(half.always());
  BernoulliThreshold zero(Rational(0));
  EXPECT_EQ(zero.threshold(), 0u);
  EXPECT_FALSE(zero.accept(0));
  BernoulliThreshold one(Rational(1));
  EXPECT_TRUE(one.always());
  EXPECT_TRUE(one.accept(~std::uint64_t{0}));
  EXPECT_EQ(one.quantized(), Rational(1));
  BernoulliThreshold tenth(Rational(3, 10));
  EXPECT_LE(tenth.quantized(), Rational(3, 10));
  EXPECT_GT(tenth.quantized() + Rational(1, 1ul << 62) / 4, Rational(3, 10));
  EXPECT_THROW(BernoulliThreshold(Rational(-1, 3)), std::out_of_range);
  EXPECT_THROW(BernoulliThreshold(Rational(4, 3)), std::out_of_range);
}

TEST(Sample, EndpointsAndDeterminism) {
  const CyclicGroup g(50);
  EXPECT_TRUE(sample_subset(g, Rational(0), 1, 0).members.empty());
  EXPECT_EQ(sample_subset(g, Rational(1), 1, 0).members.size(), 50u);
  const auto a = sample_subset(g, Rational(1, 3), 9, 17);
  const auto b = sample_subset(g, Rational(1, 3), 9, 17);
  EXPECT_EQ(a.members, b.members);
  EXPECT_EQ(a.mask, b.mask);
  for (auto r : a.members) EXPECT_TRUE(a.contains(r));
  EXPECT_FALSE(a.contains(50));
}

TEST(Sample, InclusionFrequencyNearP) {
  const CyclicGroup g(100);
  std::size_t hits = 0;
  const int trials = 2000;
  for (int t = 0; t < trials; ++t) hits += sample_subset(g, Rational(3, 10), 5, t).members.size();
  const double freq = static_cast<double>(hits) / (100.0 * trials);
  EXPECT_NEAR(freq, 0.3, 0.005);
}

TEST(Sample, MakeSubsetValidates) {
  const CyclicGroup g(8);
  const std::vector<Residue> bad = {1, 8};
  EXPECT_THROW(make_subset(g, bad), std::out_of_range);
  const std::vector<Residue> ok = {5, 2, 2};
  EXPECT_EQ(make_subset(g, ok).members, (std::vector<Residue>{2, 5}));
}

TEST(CountInSubset, C8Examples) {
  const CyclicGroup g(8);
  const std::vector<Residue> r12 = {1, 2};
  const auto c = count_in_subset(make_subset(g, r12), 2);
  EXPECT_EQ(c.total, 3);
  EXPECT_EQ(c.by_d, (std::map<std::uint64_t, BigInt>{{1, 1}, {2, 2}}));
  const std::vector<Residue> all = {0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_EQ(count_in_subset(make_subset(g, all), 2).total, 16);
  EXPECT_EQ(count_in_subset(make_subset(g, std::vector<Residue>{}), 2).total, 0);
  const std::vector<Residue> evens = {0, 2, 4, 6};
  EXPECT_EQ(count_in_subset(make_subset(g, evens), 2).total, 0);
}

TEST(SubsetCounter, AgreesWithDirectAndSupportMap) {
  for (std::uint64_t n : {7, 8, 12, 19, 30}) {
    const CyclicGroup g(n);
    for (std::uint64_t k = 0; k <= n / 3; ++k) {
      const SubsetCounter counter(g, k);
      const auto weights = support_map(g, k);
      for (std::uint64_t t = 0; t < 20; ++t) {
        const auto sample = sample_subset(g, Rational(1, 2), 11, t);
        const auto fast = counter.count_exact(sample);
        const auto direct = count_in_subset(sample, k);
        ASSERT_EQ(fast.total, direct.total) << n << "," << k << "," << t;
        ASSERT_EQ(fast.by_d, direct.by_d);
        BigInt from_map = 0;
        for (const auto& [support, w] : weights.weights()) {
          bool inside = true;
          for (auto a : support) inside = inside && sample.contains(a);
          if (inside) from_map += w;
        }
        ASSERT_EQ(fast.total, from_map);
      }
    }
  }
}

TEST(SubsetCounter, RequiredResiduesFilter) {
  const CyclicGroup g(8);
  const SubsetCounter counter(g, 2);
  std::vector<std::uint8_t> mask(8, 1);
  const std::vector<Residue> need = {1};
  const auto r = counter.count(mask, need);
  // {1}, {1,2}, {1,3}: 1 + 2 + 2
  EXPECT_EQ(r.total, 5u);
  EXPECT_EQ(r.by_d[1], 1u);
  EXPECT_EQ(r.by_d[2], 4u);
}

TEST(SubsetCounter, MonotoneUnderInclusion) {
  const CyclicGroup g(31);
  const SubsetCounter counter(g, 5);
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto sample = sample_subset(g, Rational(2, 5), 3, t);
    const auto before = counter.count(sample.mask).total;
    sample.mask[1 + t % 30] = 1;
    EXPECT_GE(counter.count(sample.mask).total, before);
  }
}

TEST(SubsetCounter, MatchesBruteForceSmallGroups) {
  for (std::uint64_t n = 2; n <= 12; ++n) {
    const CyclicGroup g(n);
    for (std::uint64_t k = 0; k <= n / 3; ++k) {
      if (n == 6 && k == 2) continue;
      const SubsetCounter counter(g, k);
      for (std::uint64_t t = 0; t < 8; ++t) {
        const auto sample = sample_subset(g, Rational(3, 5), 1, t);
        const auto truth = brute_count(g, k, sample);
        const auto got = counter.count_exact(sample);
        ASSERT_EQ(got.total, truth.total) << n << "," << k;
        ASSERT_EQ(got.by_d, truth.by_d) << n << "," << k;
      }
    }
  }
}

TEST(SubsetCounter, RangeError) {
  EXPECT_THROW(SubsetCounter(CyclicGroup(8), 3), std::out_of_range);
}
