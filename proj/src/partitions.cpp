#include "zsf/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace zsf {

Partition::Partition(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end());
  for (auto p : parts_) {
    if (p == 0) throw std::invalid_argument("partition parts must be positive");
    total_ += p;
  }
}

std::size_t Partition::distinct_parts() const noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (i == 0 || parts_[i] != parts_[i - 1]) ++count;
  return count;
}

std::vector<std::uint64_t> Partition::part_sizes() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (i == 0 || parts_[i] != parts_[i - 1]) out.push_back(parts_[i]);
  return out;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i != 0) os << ' ';
    os << parts_[i] << '^' << (j - i);
    i = j;
  }
  return os.str();
}

void for_each_partition_up_to(std::uint64_t max_total,
                              const std::function<void(const Partition&)>& fn) {
  std::vector<std::uint64_t> parts;
  std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t min_part,
                                                              std::uint64_t budget) {
    fn(Partition(parts));
    for (std::uint64_t p = min_part; p <= budget; ++p) {
      parts.push_back(p);
      rec(p, budget - p);
      parts.pop_back();
    }
  };
  rec(1, max_total);
}

bool CountTable::lookup(const std::map<Key, BigInt>& memo, const Key& key, BigInt& out) const {
  std::shared_lock lock(mutex_);
  auto it = memo.find(key);
  if (it == memo.end()) return false;
  out = it->second;
  return true;
}

void CountTable::publish(std::map<Key, BigInt>& memo, const Key& key, const BigInt& value) {
  std::unique_lock lock(mutex_);
  memo.emplace(key, value);
}

BigInt CountTable::q_from(std::uint64_t total, std::uint64_t min_part, std::uint64_t d) {
  if (d == 0) return total == 0 ? 1 : 0;
  // d distinct sizes, each >= min_part, need at least d*min_part + d(d-1)/2.
  if (total < d * min_part + d * (d - 1) / 2) return 0;

  const Key key{total, min_part, d};
  BigInt value;
  if (lookup(q_memo_, key, value)) return value;

  value = 0;
  // Smallest size i used r >= 1 times; the rest use sizes > i.
  for (std::uint64_t i = min_part; i <= total; ++i) {
    const std::uint64_t rest_min = (d - 1) * (i + 1) + (d - 1) * (d - 2) / 2;
    if (i + rest_min > total) break;
    for (std::uint64_t used = i; used + rest_min <= total; used += i)
      value += q_from(total - used, i + 1, d - 1);
  }
  publish(q_memo_, key, value);
  return value;
}

BigInt CountTable::q(std::uint64_t j, std::uint64_t d) { return q_from(j, 1, d); }

BigInt CountTable::x(std::uint64_t k, std::uint64_t d) {
  if (d == 0) return 1;
  BigInt sum = 0;
  for (std::uint64_t j = triangular(d); j <= k; ++j) sum += q(j, d);
  return sum;
}

BigInt CountTable::y(std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  if (d == 0) return 1;
  if (b < triangular(d) || c < d) return 0;
  // Every row holds at least one box.
  c = std::min(c, b);
  if (d == 1) {
    BigInt sum = 0;
    for (std::uint64_t i = 1; i <= c; ++i) sum += b / i;
    return sum;
  }

  const Key key{b, c, d};
  BigInt value;
  if (lookup(y_memo_, key, value)) return value;

  // Strip the i x j block under the shortest row length j (i = row count).
  value = 0;
  const std::uint64_t reserve = (d - 1) * d / 2;
  for (std::uint64_t i = 1; i <= c; ++i)
    for (std::uint64_t j = 1; j <= (b - reserve) / i; ++j) value += y(b - i * j, i - 1, d - 1);
  publish(y_memo_, key, value);
  return value;
}

CountTable& shared_count_table() {
  static CountTable table;
  return table;
}

BigInt q_exact(std::uint64_t j, std::uint64_t d) { return shared_count_table().q(j, d); }
BigInt big_x(std::uint64_t k, std::uint64_t d) { return shared_count_table().x(k, d); }
BigInt big_y(std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  return shared_count_table().y(b, c, d);
}

std::vector<std::vector<BigInt>> q_via_gf(std::uint64_t j_max, std::uint64_t d_max) {
  if (j_max == 0) throw std::invalid_argument("q_via_gf needs j_max >= 1");
  // coef[j][d] is the coefficient of x^j t^d in the running product.
  std::vector<std::vector<BigInt>> coef(j_max + 1, std::vector<BigInt>(d_max + 1, 0));
  coef[0][0] = 1;
  for (std::uint64_t i = 1; i <= j_max; ++i) {
    // Multiply by 1 + t (x^i + x^{2i} + ...). Descending j keeps the
    // right-hand side at its pre-multiplication value.
    for (std::uint64_t j = j_max; j >= i; --j)
      for (std::uint64_t d = d_max; d >= 1; --d)
        for (std::uint64_t step = i; step <= j; step += i) coef[j][d] += coef[j - step][d - 1];
  }
  return coef;
}

}  // namespace zsf
