#include "zsf/sequence.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace zsf {

namespace {

void check_residue(const CyclicGroup& g, Residue a) {
  if (!g.contains(a))
    throw std::out_of_range("residue " + std::to_string(a) + " is not in C_" +
                            std::to_string(g.order()));
}

bool zero_sum_free_small(std::uint64_t n, std::span<const ElementCount> entries) {
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  auto rotate = [&](std::uint64_t x, std::uint64_t a) {
    if (a == 0) return x;
    return ((x << a) | (x >> (n - a))) & mask;
  };
  // Bit s set iff s is the sum of some nonempty sub-multiset seen so far.
  std::uint64_t reach = 0;
  for (const auto& [a, m] : entries) {
    if (a == 0) return false;
    std::uint64_t with_empty = reach | 1;
    std::uint64_t shifted = with_empty;
    std::uint64_t grown = reach;
    for (std::uint64_t j = 0; j < m; ++j) {
      shifted = rotate(shifted, a);
      grown |= shifted;
      if (grown & 1) return false;
    }
    reach = grown;
  }
  return true;
}

bool zero_sum_free_large(std::uint64_t n, std::span<const ElementCount> entries) {
  std::vector<std::uint8_t> reach(n, 0), next(n), frontier(n), tmp(n);
  for (const auto& [a, m] : entries) {
    if (a == 0) return false;
    // frontier holds sums of (previous sub-multiset or empty) plus j copies of a.
    frontier = reach;
    frontier[0] = 1;
    next = reach;
    for (std::uint64_t j = 0; j < m; ++j) {
      for (std::uint64_t s = 0; s < n; ++s) {
        const std::uint64_t t = s + a >= n ? s + a - n : s + a;
        tmp[t] = frontier[s];
      }
      frontier.swap(tmp);
      for (std::uint64_t s = 0; s < n; ++s) next[s] |= frontier[s];
      if (next[0]) return false;
    }
    reach.swap(next);
  }
  return true;
}

}  // namespace

SequenceMultiset::SequenceMultiset(CyclicGroup group,
                                   const std::map<Residue, std::uint64_t>& counts)
    : group_(group) {
  for (const auto& [a, m] : counts) {
    check_residue(group_, a);
    if (m > 0) entries_.emplace_back(a, m);
  }
}

SequenceMultiset::SequenceMultiset(CyclicGroup group, std::initializer_list<ElementCount> counts)
    : group_(group) {
  for (const auto& [a, m] : counts) insert(a, m);
}

SequenceMultiset SequenceMultiset::from_elements(CyclicGroup group,
                                                 std::span<const Residue> elements) {
  SequenceMultiset s(group);
  for (Residue a : elements) s.insert(a);
  return s;
}

std::uint64_t SequenceMultiset::length() const noexcept {
  std::uint64_t total = 0;
  for (const auto& e : entries_) total += e.second;
  return total;
}

std::uint64_t SequenceMultiset::multiplicity(Residue a) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), ElementCount{a, 0});
  return it != entries_.end() && it->first == a ? it->second : 0;
}

std::vector<Residue> SequenceMultiset::support() const {
  std::vector<Residue> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

void SequenceMultiset::insert(Residue a, std::uint64_t times) {
  check_residue(group_, a);
  if (times == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), ElementCount{a, 0});
  if (it != entries_.end() && it->first == a)
    it->second += times;
  else
    entries_.insert(it, {a, times});
}

void SequenceMultiset::erase(Residue a, std::uint64_t times) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), ElementCount{a, 0});
  if (it == entries_.end() || it->first != a) return;
  if (it->second <= times)
    entries_.erase(it);
  else
    it->second -= times;
}

std::string SequenceMultiset::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, m] : entries_) {
    if (!first) os << ' ';
    os << a << ':' << m;
    first = false;
  }
  return os.str();
}

std::size_t SequenceMultisetHash::operator()(const SequenceMultiset& s) const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(s.group().order());
  for (const auto& [a, m] : s.entries()) {
    h ^= std::hash<std::uint64_t>{}(a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint64_t>{}(m) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool is_zero_sum_free(std::uint64_t n, std::span<const ElementCount> entries) {
  if (entries.empty()) return true;
  return n <= 64 ? zero_sum_free_small(n, entries) : zero_sum_free_large(n, entries);
}

bool is_zero_sum_free(const SequenceMultiset& seq) {
  return is_zero_sum_free(seq.group().order(), seq.entries());
}

MultisetSet brute_force_enumerate(CyclicGroup group, std::uint64_t length, unsigned threads) {
  const std::uint64_t n = group.order();
  if (n < 1 || length + 1 > n)
    throw std::out_of_range("length " + std::to_string(length) +
                            " exceeds the maximum zero-sum free length n-1 = " +
                            std::to_string(n - 1));
  MultisetSet result;
  if (length == 0) {
    result.emplace(group);
    return result;
  }

  // Every multiset over [1, n-1] is a choice of count per value. Work item
  // `first` covers the multisets whose smallest element is `first`.
  auto run = [&](Residue first, std::vector<SequenceMultiset>& out) {
    std::vector<ElementCount> buf;
    std::function<void(Residue, std::uint64_t)> rec = [&](Residue v, std::uint64_t left) {
      if (left == 0) {
        if (is_zero_sum_free(n, buf)) {
          SequenceMultiset s(group);
          for (const auto& [a, m] : buf) s.insert(a, m);
          out.push_back(std::move(s));
        }
        return;
      }
      if (v >= n) return;
      rec(v + 1, left);
      for (std::uint64_t c = 1; c <= left; ++c) {
        buf.emplace_back(v, c);
        rec(v + 1, left - c);
        buf.pop_back();
      }
    };
    for (std::uint64_t c = 1; c <= length; ++c) {
      buf.assign(1, {first, c});
      rec(first + 1, length - c);
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n - 1)));
  std::vector<std::vector<SequenceMultiset>> parts(n);
  if (workers == 1) {
    for (Residue first = 1; first < n; ++first) run(first, parts[first]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (Residue first = 1 + w; first < n; first += workers) run(first, parts[first]);
      });
    for (auto& t : pool) t.join();
  }
  for (auto& part : parts)
    for (auto& s : part) result.insert(std::move(s));
  return result;
}

}  // namespace zsf
