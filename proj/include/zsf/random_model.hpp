#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "zsf/cyclic_group.hpp"
#include "zsf/structure.hpp"
#include "zsf/types.hpp"

namespace zsf {

/// Philox4x32-10 counter-based generator: a pure function of (key, counter).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

/// Uniform 64-bit word for one (seed, trial, residue) triple.
std::uint64_t uniform_word(std::uint64_t seed, std::uint64_t trial_index, Residue residue) noexcept;

/// Exact p quantized once to a 64-bit inclusion threshold.
///
/// A residue is included iff its uniform word is below floor(p * 2^64);
/// p == 1 includes every residue.
class BernoulliThreshold {
 public:
  /// Throws std::out_of_range when p is outside [0, 1].
  explicit BernoulliThreshold(const Rational& p);

  const Rational& p() const noexcept { return p_; }
  bool always() const noexcept { return always_; }
  std::uint64_t threshold() const noexcept { return threshold_; }
  /// threshold / 2^64, or 1 when always().
  Rational quantized() const;

  bool accept(std::uint64_t word) const noexcept { return always_ || word < threshold_; }

 private:
  Rational p_;
  bool always_ = false;
  std::uint64_t threshold_ = 0;
};

/// A realized random subset R of C_n together with how it was drawn.
struct SubsetSample {
  CyclicGroup group;
  std::vector<Residue> members;     // ascending
  std::vector<std::uint8_t> mask;   // mask[a] == 1 iff a in members
  std::uint64_t seed = 0;
  std::uint64_t trial_index = 0;
  Rational p;

  bool contains(Residue a) const { return a < mask.size() && mask[a] != 0; }
};

SubsetSample sample_subset(const CyclicGroup& group, const Rational& p, std::uint64_t seed,
                           std::uint64_t trial_index);
SubsetSample sample_subset(const CyclicGroup& group, const BernoulliThreshold& p,
                           std::uint64_t seed, std::uint64_t trial_index);

/// A fixed member set, for tests and conditioning. Throws std::out_of_range on
/// residues outside the group.
SubsetSample make_subset(const CyclicGroup& group, std::span<const Residue> members);

struct SubsetCount {
  BigInt total;
  std::map<std::uint64_t, BigInt> by_d;   // only nonzero entries
};

/// Distinct zero-sum free sequences of length n-1-k with support inside the
/// sample, by expanding structured configurations for generators in the
/// sample and deduplicating.
SubsetCount count_in_subset(const SubsetSample& sample, std::uint64_t k);

/// Per-trial counter over the precomputed support classes of (C_n, k).
///
/// Each class is owned by one of its support residues (its generator when the
/// generator lies in the support) and is checked only when the owner is in R.
class SubsetCounter {
 public:
  /// Throws std::out_of_range for k outside [0, floor(n/3)] and
  /// std::overflow_error when the total weight does not fit in 63 bits.
  SubsetCounter(const CyclicGroup& group, std::uint64_t k);

  struct Result {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> by_d;   // index d, size max_support + 1
  };

  /// Counts over supports inside `mask`. When `required` is nonempty only
  /// supports containing every required residue are counted.
  Result count(std::span<const std::uint8_t> mask,
               std::span<const Residue> required = {}) const;

  SubsetCount count_exact(const SubsetSample& sample) const;

  const CyclicGroup& group() const noexcept { return group_; }
  std::uint64_t k() const noexcept { return k_; }
  std::size_t max_support() const noexcept { return max_support_; }
  std::size_t class_count() const noexcept { return class_count_; }

 private:
  struct Edge {
    std::vector<Residue> others;   // support minus the owning generator
    std::uint64_t weight;
    std::uint32_t size;            // full support size
  };
  CyclicGroup group_;
  std::uint64_t k_;
  std::size_t max_support_ = 0;
  std::size_t class_count_ = 0;
  std::vector<std::pair<Residue, std::vector<Edge>>> by_owner_;
};

}  // namespace zsf
