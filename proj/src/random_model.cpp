#include "zsf/random_model.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace zsf {

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) noexcept {
  constexpr std::uint32_t kMul0 = 0xD2511F53u;
  constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

std::uint64_t uniform_word(std::uint64_t seed, std::uint64_t trial_index,
                           Residue residue) noexcept {
  const auto out = philox4x32(
      {static_cast<std::uint32_t>(trial_index), static_cast<std::uint32_t>(trial_index >> 32),
       static_cast<std::uint32_t>(residue), static_cast<std::uint32_t>(residue >> 32)},
      {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

BernoulliThreshold::BernoulliThreshold(const Rational& p) : p_(p) {
  require_probability(p);
  if (p == 1) {
    always_ = true;
    threshold_ = std::numeric_limits<std::uint64_t>::max();
    return;
  }
  // floor(p * 2^64) < 2^64 because p < 1.
  BigInt scaled = p.get_num();
  scaled <<= 64;
  scaled /= p.get_den();
  const BigInt hi = scaled >> 32;
  const BigInt lo = scaled - (hi << 32);
  threshold_ = (static_cast<std::uint64_t>(hi.get_ui()) << 32) | lo.get_ui();
}

Rational BernoulliThreshold::quantized() const {
  if (always_) return 1;
  BigInt num = static_cast<unsigned long>(threshold_ >> 32);
  num <<= 32;
  num += static_cast<unsigned long>(threshold_ & 0xFFFFFFFFu);
  BigInt den = 1;
  den <<= 64;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

SubsetSample sample_subset(const CyclicGroup& group, const BernoulliThreshold& p,
                           std::uint64_t seed, std::uint64_t trial_index) {
  SubsetSample s{group, {}, std::vector<std::uint8_t>(group.order(), 0), seed, trial_index, p.p()};
  for (Residue a = 0; a < group.order(); ++a)
    if (p.accept(uniform_word(seed, trial_index, a))) {
      s.mask[a] = 1;
      s.members.push_back(a);
    }
  return s;
}

SubsetSample sample_subset(const CyclicGroup& group, const Rational& p, std::uint64_t seed,
                           std::uint64_t trial_index) {
  return sample_subset(group, BernoulliThreshold(p), seed, trial_index);
}

SubsetSample make_subset(const CyclicGroup& group, std::span<const Residue> members) {
  SubsetSample s{group, {}, std::vector<std::uint8_t>(group.order(), 0), 0, 0, Rational(0)};
  for (Residue a : members) {
    if (!group.contains(a))
      throw std::out_of_range("residue " + std::to_string(a) + " is not in C_" +
                              std::to_string(group.order()));
    s.mask[a] = 1;
  }
  for (Residue a = 0; a < group.order(); ++a)
    if (s.mask[a]) s.members.push_back(a);
  return s;
}

SubsetCount count_in_subset(const SubsetSample& sample, std::uint64_t k) {
  const CyclicGroup& group = sample.group;
  require_structure_range(group, k);
  std::vector<std::vector<std::uint64_t>> tuples;
  for_each_partition_up_to(k, [&](const Partition& part) {
    std::vector<std::uint64_t> x(k - part.size(), 1);
    for (auto v : part.parts()) x.push_back(v + 1);
    tuples.push_back(std::move(x));
  });

  MultisetSet found;
  for (Residue g : sample.members) {
    if (!group.is_generator(g)) continue;
    for (const auto& x : tuples) {
      SequenceMultiset seq = ZsfConfiguration(g, x).realize(group);
      const bool inside = std::all_of(seq.entries().begin(), seq.entries().end(),
                                      [&](const ElementCount& e) { return sample.contains(e.first); });
      if (inside) found.insert(std::move(seq));
    }
  }
  SubsetCount out;
  out.total = static_cast<unsigned long>(found.size());
  for (const auto& seq : found) out.by_d[seq.distinct_count()] += 1;
  return out;
}

SubsetCounter::SubsetCounter(const CyclicGroup& group, std::uint64_t k) : group_(group), k_(k) {
  const auto classes = support_classes(group, k);
  class_count_ = classes.size();
  BigInt total = 0;
  for (const auto& cls : classes) {
    total += cls.weight;
    max_support_ = std::max(max_support_, cls.support.size());
  }
  if (total > BigInt("9223372036854775807"))
    throw std::overflow_error("total support weight " + total.get_str() +
                              " does not fit the per-trial 64-bit counter");

  std::map<Residue, std::vector<Edge>> owned;
  for (const auto& cls : classes) {
    const bool generator_inside = std::binary_search(cls.support.begin(), cls.support.end(), cls.generator);
    const Residue owner = generator_inside ? cls.generator : cls.support.front();
    Edge edge{{}, 0, static_cast<std::uint32_t>(cls.support.size())};
    for (Residue a : cls.support)
      if (a != owner) edge.others.push_back(a);
    const BigInt hi = cls.weight >> 32;
    edge.weight = (static_cast<std::uint64_t>(hi.get_ui()) << 32) |
                  BigInt(cls.weight - (hi << 32)).get_ui();
    owned[owner].push_back(std::move(edge));
  }
  by_owner_.assign(owned.begin(), owned.end());
}

SubsetCounter::Result SubsetCounter::count(std::span<const std::uint8_t> mask,
                                           std::span<const Residue> required) const {
  Result r;
  r.by_d.assign(max_support_ + 1, 0);
  for (const auto& [g, edges] : by_owner_) {
    if (!mask[g]) continue;
    for (const auto& edge : edges) {
      bool inside = true;
      for (Residue a : edge.others)
        if (!mask[a]) {
          inside = false;
          break;
        }
      if (!inside) continue;
      if (!required.empty()) {
        bool covers = true;
        for (Residue a : required)
          if (a != g && !std::binary_search(edge.others.begin(), edge.others.end(), a)) {
            covers = false;
            break;
          }
        if (!covers) continue;
      }
      r.total += edge.weight;
      r.by_d[edge.size] += edge.weight;
    }
  }
  return r;
}

SubsetCount SubsetCounter::count_exact(const SubsetSample& sample) const {
  const auto r = count(sample.mask);
  SubsetCount out;
  out.total = static_cast<unsigned long>(r.total);
  for (std::size_t d = 0; d < r.by_d.size(); ++d)
    if (r.by_d[d] != 0) out.by_d[d] = static_cast<unsigned long>(r.by_d[d]);
  return out;
}

}  // namespace zsf
