#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "zsf/cyclic_group.hpp"
#include "zsf/partitions.hpp"
#include "zsf/sequence.hpp"
#include "zsf/types.hpp"

namespace zsf {

/// Largest d with (d-1)d/2 <= k, by exact integer search.
std::uint64_t d_max(std::uint64_t k) noexcept;

/// Throws std::out_of_range unless n >= 2 and 0 <= k <= floor(n/3).
void require_structure_range(const CyclicGroup& group, std::uint64_t k);

/// Throws std::out_of_range unless 0 <= p <= 1.
void require_probability(const Rational& p);

/// A generator g and a nondecreasing k-tuple 1 <= x_1 <= ... <= x_k with
/// x_1 + ... + x_k <= 2k. It stands for the length n-1-k sequence
/// g^(n-1-2k) (x_1 g) ... (x_k g).
class ZsfConfiguration {
 public:
  /// Throws std::invalid_argument if x is not a valid tuple for k = x.size().
  ZsfConfiguration(Residue generator, std::vector<std::uint64_t> x);

  Residue generator() const noexcept { return generator_; }
  std::uint64_t k() const noexcept { return x_.size(); }
  const std::vector<std::uint64_t>& x() const noexcept { return x_; }

  /// The positive x'_i = x_i - 1 as a partition of total <= k.
  Partition shifted_partition() const;

  SequenceMultiset realize(const CyclicGroup& group) const;

  auto operator<=>(const ZsfConfiguration&) const = default;
  bool operator==(const ZsfConfiguration&) const = default;

 private:
  Residue generator_;
  std::vector<std::uint64_t> x_;
};

/// x_1 <= ... <= x_k, all >= 1, sum <= 2k.
bool is_valid_configuration(std::span<const std::uint64_t> x);

/// Several configurations realizing one multiset.
struct Collision {
  SequenceMultiset multiset;
  std::vector<ZsfConfiguration> configurations;
};

struct StructuredEnumeration {
  struct Entry {
    ZsfConfiguration configuration;
    SequenceMultiset multiset;
  };
  /// Ordered by (generator, x-tuple).
  std::vector<Entry> entries;
  /// Filled only when dedupe was requested.
  MultisetSet distinct;
  std::vector<Collision> collisions;
};

/// Every (generator, x-tuple) pair for C_n and k, realized as multisets.
StructuredEnumeration enumerate_structured(const CyclicGroup& group, std::uint64_t k, bool dedupe);

/// The representation count phi(n) * X(k, d-1). This counts configurations;
/// it equals the number of distinct multisets only when no collisions occur.
BigInt count_n(const CyclicGroup& group, std::uint64_t k, std::uint64_t d);

/// Support set (ascending residues) to the number of distinct zero-sum free
/// sequences of length n-1-k with exactly that support.
class SupportWeightMap {
 public:
  using Support = std::vector<Residue>;

  void add(const Support& support, const BigInt& weight);
  const std::map<Support, BigInt>& weights() const noexcept { return weights_; }
  BigInt weight(const Support& support) const;
  BigInt total() const;
  std::size_t size() const noexcept { return weights_.size(); }

  bool operator==(const SupportWeightMap&) const = default;

 private:
  std::map<Support, BigInt> weights_;
};

/// One hyperedge class: a support, its weight, and the smallest generator
/// whose configurations realize it.
struct SupportClass {
  std::vector<Residue> support;
  BigInt weight;
  Residue generator;
};

/// Supports grouped without expanding every configuration: configurations
/// sharing a generator and a set of positive x' values share a support.
/// Supports reached by more than one such group are expanded and deduped
/// explicitly. Sorted by (generator, support).
std::vector<SupportClass> support_classes(const CyclicGroup& group, std::uint64_t k);

SupportWeightMap support_map(const CyclicGroup& group, std::uint64_t k);

/// Reference implementation: dedupe enumerate_structured and group by support.
SupportWeightMap support_map_by_enumeration(const CyclicGroup& group, std::uint64_t k);

/// phi(n) [p + sum_{d=2}^{D} p^d X(k, d-1)].
Rational expectation_total(const CyclicGroup& group, std::uint64_t k, const Rational& p);

/// p^d phi(n) X(k, d-1); zero once d exceeds d_max(k).
Rational expectation_by_d(const CyclicGroup& group, std::uint64_t k, std::uint64_t d,
                          const Rational& p);

struct FirstOrderExpectation {
  Rational leading;                    // p phi(n)
  Rational correction_coefficient;     // C_k = sum_{d=2}^{D} X(k, d-1)
};

/// |E - p phi(n)| <= p phi(n) C_k p for p in [0, 1].
FirstOrderExpectation expectation_first_order(const CyclicGroup& group, std::uint64_t k,
                                              const Rational& p);

/// Structured-vs-brute-force comparison for one (n, k).
struct StructureCheck {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::size_t configurations = 0;
  std::size_t distinct_structured = 0;
  std::size_t brute_force = 0;
  std::size_t collisions = 0;
  std::vector<SequenceMultiset> missing;   // brute force only
  std::vector<SequenceMultiset> extra;     // structured only
  std::vector<SequenceMultiset> not_zero_sum_free;
  /// d -> (phi(n) X(k, d-1), distinct multisets with d distinct elements)
  std::map<std::uint64_t, std::pair<BigInt, BigInt>> per_d;

  bool sets_equal() const { return missing.empty() && extra.empty() && not_zero_sum_free.empty(); }
  bool counts_match() const;
  bool ok() const { return sets_equal() && counts_match() && collisions == 0; }
};

StructureCheck check_structure(const CyclicGroup& group, std::uint64_t k, unsigned threads = 1);

}  // namespace zsf
