#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "zsf/types.hpp"

namespace zsf {

/// An integer partition, parts kept in nondecreasing order.
class Partition {
 public:
  Partition() = default;
  /// Parts are sorted; throws std::invalid_argument on a zero part.
  explicit Partition(std::vector<std::uint64_t> parts);

  const std::vector<std::uint64_t>& parts() const noexcept { return parts_; }
  std::uint64_t total() const noexcept { return total_; }
  std::size_t size() const noexcept { return parts_.size(); }
  std::size_t distinct_parts() const noexcept;

  /// Distinct part sizes, ascending.
  std::vector<std::uint64_t> part_sizes() const;

  /// Exponent notation, e.g. "1^2 2^1 3^1"; the empty partition is "0".
  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<std::uint64_t> parts_;
  std::uint64_t total_ = 0;
};

/// Calls fn on every partition (including the empty one) whose total is at
/// most max_total, parts nondecreasing. Enumeration order is deterministic.
void for_each_partition_up_to(std::uint64_t max_total,
                              const std::function<void(const Partition&)>& fn);

/// Memoized exact values of q(j, d) and Y(b, c, d).
///
/// q(j, d)     partitions of j with exactly d distinct part sizes.
/// X(k, d)     partitions of total at most k with exactly d distinct sizes.
/// Y(b, c, d)  Young diagrams with at most b boxes, at most c rows and exactly
///             d distinct row lengths.
///
/// Entries are write-once: a value is inserted after it is fully computed and
/// never overwritten, so concurrent readers always see final values.
class CountTable {
 public:
  BigInt q(std::uint64_t j, std::uint64_t d);
  BigInt x(std::uint64_t k, std::uint64_t d);
  BigInt y(std::uint64_t b, std::uint64_t c, std::uint64_t d);

 private:
  using Key = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;

  // Partitions of `total` into parts >= min_part with exactly d distinct sizes.
  BigInt q_from(std::uint64_t total, std::uint64_t min_part, std::uint64_t d);

  bool lookup(const std::map<Key, BigInt>& memo, const Key& key, BigInt& out) const;
  void publish(std::map<Key, BigInt>& memo, const Key& key, const BigInt& value);

  mutable std::shared_mutex mutex_;
  std::map<Key, BigInt> q_memo_;
  std::map<Key, BigInt> y_memo_;
};

/// Process-wide table shared by the free functions below.
CountTable& shared_count_table();

BigInt q_exact(std::uint64_t j, std::uint64_t d);
BigInt big_x(std::uint64_t k, std::uint64_t d);
BigInt big_y(std::uint64_t b, std::uint64_t c, std::uint64_t d);

/// q(j, d) for 0 <= j <= j_max, 0 <= d <= d_max read off the coefficients of
/// prod_{i=1}^{j_max} (1 + t x^i / (1 - x^i)), truncated at x^{j_max} and
/// t^{d_max}. Entry [0][0] is the constant term 1 (the empty partition).
/// Throws std::invalid_argument when j_max == 0.
std::vector<std::vector<BigInt>> q_via_gf(std::uint64_t j_max, std::uint64_t d_max);

/// d(d+1)/2, the smallest total of a partition with d distinct part sizes.
constexpr std::uint64_t triangular(std::uint64_t d) noexcept { return d * (d + 1) / 2; }

}  // namespace zsf
