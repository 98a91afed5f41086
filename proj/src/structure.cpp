#include "zsf/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace zsf {

namespace {

// A set of positive x' values together with the number of partitions of
// total <= k whose distinct part sizes are exactly that set.
struct PartSizeClass {
  std::vector<std::uint64_t> sizes;
  BigInt count;
};

std::vector<PartSizeClass> part_size_classes(std::uint64_t k) {
  std::vector<PartSizeClass> out;
  std::vector<std::uint64_t> sizes;
  std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t next,
                                                              std::uint64_t slack) {
    // Each size used once already; distribute the slack as extra copies.
    std::vector<BigInt> ways(slack + 1, 0);
    ways[0] = 1;
    for (auto t : sizes)
      for (std::uint64_t m = t; m <= slack; ++m) ways[m] += ways[m - t];
    BigInt count = 0;
    for (const auto& w : ways) count += w;
    out.push_back({sizes, count});
    for (std::uint64_t t = next; t <= slack; ++t) {
      sizes.push_back(t);
      rec(t + 1, slack - t);
      sizes.pop_back();
    }
  };
  rec(1, k);
  return out;
}

// Calls fn(multiplicities) for every r with r_t >= 1 and sum r_t * t <= k.
void for_each_multiplicity(const std::vector<std::uint64_t>& sizes, std::uint64_t k,
                           const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
  std::vector<std::uint64_t> r(sizes.size(), 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t idx,
                                                            std::uint64_t budget) {
    if (idx == sizes.size()) {
      fn(r);
      return;
    }
    for (std::uint64_t m = 1; m * sizes[idx] <= budget; ++m) {
      r[idx] = m;
      rec(idx + 1, budget - m * sizes[idx]);
    }
  };
  rec(0, k);
}

SequenceMultiset realize_class(const CyclicGroup& group, std::uint64_t k, Residue g,
                               const std::vector<std::uint64_t>& sizes,
                               const std::vector<std::uint64_t>& mult) {
  const std::uint64_t parts = std::accumulate(mult.begin(), mult.end(), std::uint64_t{0});
  SequenceMultiset s(group);
  s.insert(g, group.order() - 1 - k - parts);
  for (std::size_t i = 0; i < sizes.size(); ++i)
    s.insert(group.scalar_mul(sizes[i] + 1, g), mult[i]);
  return s;
}

std::vector<std::vector<std::uint64_t>> x_tuples(std::uint64_t k) {
  std::vector<std::vector<std::uint64_t>> out;
  for_each_partition_up_to(k, [&](const Partition& part) {
    std::vector<std::uint64_t> x(k - part.size(), 1);
    for (auto v : part.parts()) x.push_back(v + 1);
    out.push_back(std::move(x));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::uint64_t d_max(std::uint64_t k) noexcept {
  std::uint64_t d = 1;
  while ((d + 1) * d / 2 <= k) ++d;
  return d;
}

void require_structure_range(const CyclicGroup& group, std::uint64_t k) {
  if (group.order() < 2)
    throw std::out_of_range("structure results need n >= 2, got n = " +
                            std::to_string(group.order()));
  if (k > group.order() / 3)
    throw std::out_of_range("k = " + std::to_string(k) + " exceeds floor(n/3) = " +
                            std::to_string(group.order() / 3));
}

void require_probability(const Rational& p) {
  if (p < 0 || p > 1) throw std::out_of_range("p = " + p.get_str() + " is outside [0, 1]");
}

bool is_valid_configuration(std::span<const std::uint64_t> x) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 1) return false;
    if (i > 0 && x[i] < x[i - 1]) return false;
    sum += x[i];
  }
  return sum <= 2 * x.size();
}

ZsfConfiguration::ZsfConfiguration(Residue generator, std::vector<std::uint64_t> x)
    : generator_(generator), x_(std::move(x)) {
  if (!is_valid_configuration(x_))
    throw std::invalid_argument("x-tuple must be nondecreasing, positive, with sum <= 2k");
}

Partition ZsfConfiguration::shifted_partition() const {
  std::vector<std::uint64_t> parts;
  for (auto v : x_)
    if (v > 1) parts.push_back(v - 1);
  return Partition(std::move(parts));
}

SequenceMultiset ZsfConfiguration::realize(const CyclicGroup& group) const {
  require_structure_range(group, k());
  if (!group.is_generator(generator_))
    throw std::invalid_argument(std::to_string(generator_) + " does not generate C_" +
                                std::to_string(group.order()));
  SequenceMultiset s(group);
  s.insert(generator_, group.order() - 1 - 2 * k());
  for (auto v : x_) s.insert(group.scalar_mul(v, generator_));
  return s;
}

StructuredEnumeration enumerate_structured(const CyclicGroup& group, std::uint64_t k,
                                           bool dedupe) {
  require_structure_range(group, k);
  StructuredEnumeration out;
  const auto tuples = x_tuples(k);
  for (Residue g : group.generators())
    for (const auto& x : tuples) {
      ZsfConfiguration config(g, x);
      SequenceMultiset seq = config.realize(group);
      out.entries.push_back({std::move(config), std::move(seq)});
    }
  if (!dedupe) return out;

  std::map<SequenceMultiset, std::vector<std::size_t>> owners;
  for (std::size_t i = 0; i < out.entries.size(); ++i)
    owners[out.entries[i].multiset].push_back(i);
  for (auto& [seq, idx] : owners) {
    out.distinct.insert(seq);
    if (idx.size() < 2) continue;
    Collision c{seq, {}};
    for (auto i : idx) c.configurations.push_back(out.entries[i].configuration);
    out.collisions.push_back(std::move(c));
  }
  return out;
}

BigInt count_n(const CyclicGroup& group, std::uint64_t k, std::uint64_t d) {
  require_structure_range(group, k);
  if (d == 0) throw std::out_of_range("d must be at least 1");
  return BigInt(static_cast<unsigned long>(totient(group.order()))) * big_x(k, d - 1);
}

void SupportWeightMap::add(const Support& support, const BigInt& weight) {
  auto [it, inserted] = weights_.emplace(support, weight);
  if (!inserted) it->second += weight;
}

BigInt SupportWeightMap::weight(const Support& support) const {
  auto it = weights_.find(support);
  return it == weights_.end() ? BigInt(0) : it->second;
}

BigInt SupportWeightMap::total() const {
  BigInt sum = 0;
  for (const auto& [s, w] : weights_) sum += w;
  return sum;
}

SupportWeightMap support_map_by_enumeration(const CyclicGroup& group, std::uint64_t k) {
  const auto e = enumerate_structured(group, k, true);
  SupportWeightMap map;
  for (const auto& seq : e.distinct) map.add(seq.support(), 1);
  return map;
}

std::vector<SupportClass> support_classes(const CyclicGroup& group, std::uint64_t k) {
  require_structure_range(group, k);
  const std::uint64_t n = group.order();
  std::vector<SupportClass> out;

  if (n - 1 - 2 * k == 0) {
    // The generator itself may be absent, so supports are not determined by
    // (g, part sizes); expand everything.
    const auto e = enumerate_structured(group, k, true);
    std::map<std::vector<Residue>, SupportClass> by_support;
    for (const auto& seq : e.distinct) {
      auto [it, fresh] = by_support.emplace(seq.support(), SupportClass{seq.support(), 0, n});
      it->second.weight += 1;
    }
    for (const auto& entry : e.entries) {
      auto& cls = by_support.at(entry.multiset.support());
      cls.generator = std::min(cls.generator, entry.configuration.generator());
    }
    for (auto& [s, cls] : by_support) out.push_back(std::move(cls));
  } else {
    const auto classes = part_size_classes(k);
    std::map<std::vector<Residue>, std::vector<std::pair<Residue, std::size_t>>> groups;
    for (Residue g : group.generators())
      for (std::size_t c = 0; c < classes.size(); ++c) {
        std::vector<Residue> support{g};
        for (auto t : classes[c].sizes) support.push_back(group.scalar_mul(t + 1, g));
        std::sort(support.begin(), support.end());
        groups[support].emplace_back(g, c);
      }
    for (auto& [support, members] : groups) {
      SupportClass cls{support, 0, members.front().first};
      if (members.size() == 1) {
        cls.weight = classes[members.front().second].count;
      } else {
        MultisetSet seen;
        for (const auto& [g, c] : members) {
          cls.generator = std::min(cls.generator, g);
          for_each_multiplicity(classes[c].sizes, k, [&](const std::vector<std::uint64_t>& r) {
            seen.insert(realize_class(group, k, g, classes[c].sizes, r));
          });
        }
        cls.weight = static_cast<unsigned long>(seen.size());
      }
      out.push_back(std::move(cls));
    }
  }
  std::sort(out.begin(), out.end(), [](const SupportClass& a, const SupportClass& b) {
    return std::tie(a.generator, a.support) < std::tie(b.generator, b.support);
  });
  return out;
}

SupportWeightMap support_map(const CyclicGroup& group, std::uint64_t k) {
  SupportWeightMap map;
  for (const auto& cls : support_classes(group, k)) map.add(cls.support, cls.weight);
  return map;
}

Rational expectation_by_d(const CyclicGroup& group, std::uint64_t k, std::uint64_t d,
                          const Rational& p) {
  require_probability(p);
  const BigInt count = count_n(group, k, d);
  Rational power = 1;
  for (std::uint64_t i = 0; i < d; ++i) power *= p;
  return power * Rational(count);
}

Rational expectation_total(const CyclicGroup& group, std::uint64_t k, const Rational& p) {
  require_probability(p);
  require_structure_range(group, k);
  Rational sum = 0;
  for (std::uint64_t d = 1; d <= d_max(k); ++d) sum += expectation_by_d(group, k, d, p);
  return sum;
}

FirstOrderExpectation expectation_first_order(const CyclicGroup& group, std::uint64_t k,
                                              const Rational& p) {
  require_probability(p);
  require_structure_range(group, k);
  FirstOrderExpectation out;
  out.leading = p * Rational(static_cast<unsigned long>(totient(group.order())));
  BigInt c = 0;
  for (std::uint64_t d = 2; d <= d_max(k); ++d) c += big_x(k, d - 1);
  out.correction_coefficient = Rational(c);
  return out;
}

bool StructureCheck::counts_match() const {
  for (const auto& [d, pair] : per_d)
    if (pair.first != pair.second) return false;
  return true;
}

StructureCheck check_structure(const CyclicGroup& group, std::uint64_t k, unsigned threads) {
  require_structure_range(group, k);
  StructureCheck out;
  out.n = group.order();
  out.k = k;

  const auto e = enumerate_structured(group, k, true);
  out.configurations = e.entries.size();
  out.distinct_structured = e.distinct.size();
  out.collisions = e.collisions.size();

  const auto brute = brute_force_enumerate(group, group.order() - 1 - k, threads);
  out.brute_force = brute.size();
  std::set_difference(brute.begin(), brute.end(), e.distinct.begin(), e.distinct.end(),
                      std::back_inserter(out.missing));
  std::set_difference(e.distinct.begin(), e.distinct.end(), brute.begin(), brute.end(),
                      std::back_inserter(out.extra));
  for (const auto& seq : e.distinct)
    if (!is_zero_sum_free(seq)) out.not_zero_sum_free.push_back(seq);

  std::uint64_t top = d_max(k);
  for (const auto& seq : e.distinct) top = std::max<std::uint64_t>(top, seq.distinct_count());
  for (std::uint64_t d = 1; d <= top; ++d) out.per_d[d] = {count_n(group, k, d), BigInt(0)};
  for (const auto& seq : e.distinct) out.per_d[seq.distinct_count()].second += 1;
  return out;
}

}  // namespace zsf
