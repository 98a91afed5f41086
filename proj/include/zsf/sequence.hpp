#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zsf/cyclic_group.hpp"

namespace zsf {

/// (residue, multiplicity) with multiplicity >= 1.
using ElementCount = std::pair<Residue, std::uint64_t>;

/// An order-free sequence over C_n: a multiset of residues.
///
/// Stored as (residue, multiplicity) pairs in ascending residue order, which
/// is also the canonical form used for equality, ordering and hashing.
class SequenceMultiset {
 public:
  explicit SequenceMultiset(CyclicGroup group) : group_(group) {}

  /// Zero multiplicities are dropped. Throws std::out_of_range for a residue
  /// outside [0, n-1].
  SequenceMultiset(CyclicGroup group, const std::map<Residue, std::uint64_t>& counts);
  SequenceMultiset(CyclicGroup group, std::initializer_list<ElementCount> counts);

  /// Builds the multiset from a flat list of elements, e.g. {1,1,1,1,2}.
  static SequenceMultiset from_elements(CyclicGroup group, std::span<const Residue> elements);

  const CyclicGroup& group() const noexcept { return group_; }
  std::span<const ElementCount> entries() const noexcept { return entries_; }

  std::uint64_t length() const noexcept;
  std::size_t distinct_count() const noexcept { return entries_.size(); }
  std::uint64_t multiplicity(Residue a) const noexcept;

  /// Ascending distinct residues.
  std::vector<Residue> support() const;

  void insert(Residue a, std::uint64_t times = 1);

  /// Removes up to `times` copies of a.
  void erase(Residue a, std::uint64_t times = 1);

  /// "1:4 2:1" style, ascending residues. Empty multiset renders as "".
  std::string to_string() const;

  bool operator==(const SequenceMultiset& other) const {
    return group_ == other.group_ && entries_ == other.entries_;
  }
  bool operator<(const SequenceMultiset& other) const {
    if (group_.order() != other.group_.order()) return group_.order() < other.group_.order();
    return entries_ < other.entries_;
  }

 private:
  CyclicGroup group_;
  std::vector<ElementCount> entries_;
};

struct SequenceMultisetHash {
  std::size_t operator()(const SequenceMultiset& s) const noexcept;
};

/// Deterministically ordered set of multisets.
using MultisetSet = std::set<SequenceMultiset>;

/// True iff no nonempty sub-multiset sums to 0 mod n.
bool is_zero_sum_free(const SequenceMultiset& seq);

/// Same predicate on raw (residue, multiplicity) pairs over C_n.
bool is_zero_sum_free(std::uint64_t n, std::span<const ElementCount> entries);

/// All zero-sum free multisets of the given length over C_n, found by
/// generating every multiset over [1, n-1] and filtering. Exponential; meant
/// as a ground-truth oracle for small n. Throws std::out_of_range when
/// length > n - 1. `threads` splits the search by smallest element.
MultisetSet brute_force_enumerate(CyclicGroup group, std::uint64_t length, unsigned threads = 1);

}  // namespace zsf
