#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zsf/cyclic_group.hpp"
#include "zsf/types.hpp"

namespace zsf {

/// Which count a bound or experiment refers to: all sequences of length
/// n-1-k, or only those with exactly d distinct elements.
struct Statistic {
  enum class Kind { Total, ByD };
  Kind kind = Kind::Total;
  std::uint64_t d = 0;

  static Statistic total() { return {Kind::Total, 0}; }
  static Statistic by_d(std::uint64_t d) { return {Kind::ByD, d}; }
  bool is_total() const noexcept { return kind == Kind::Total; }
  std::string name() const;
};

// Polynomial concentration parameters. Values are floating point; the exact
// inputs come from BoundChain.
struct KimVuParams {
  std::uint64_t ell = 1;
  double lambda = 2.0;
  std::uint64_t n = 2;
  double e_prime = 1.0;
  double e_star = 1.0;
};

/// 8^ell * sqrt(ell!).
double a_ell(std::uint64_t ell);

/// a_ell * sqrt(E' E*) * lambda^ell. Throws std::out_of_range for lambda <= 1.
double kim_vu_threshold(const KimVuParams& params);

struct TailBound {
  double probability;   // raw formula value, may exceed 1
  bool vacuous;         // probability >= 1
};

/// 2 e^{-lambda + 2} n^{ell - 1}. Throws std::out_of_range for lambda <= 1.
TailBound kim_vu_failure_prob(const KimVuParams& params);

/// 2 exp(-lambda^2 E / 3) for 0 < lambda < 1 and E > 0.
TailBound chernoff_tail(double expectation, double lambda);

/// Upper bound on E_{d,1}; exactly 1 for d == 1. Throws std::out_of_range
/// when d == 0 or d > d_max(k).
Rational e_d1_bound(std::uint64_t k, std::uint64_t d, const Rational& p);

/// Upper bound on E_{d,i} for 1 <= i < d <= d_max(k); exactly 1 when i == d.
/// X terms with a negative second index count as zero.
Rational e_di_bound(std::uint64_t k, std::uint64_t d, std::uint64_t i, const Rational& p);

/// E_i, E' and E* assembled for one statistic.
struct BoundChain {
  Statistic statistic;
  std::uint64_t ell = 1;            // largest hyperedge size
  std::vector<Rational> e_by_i;     // e_by_i[i - 1] bounds E_i
  Rational e_prime;
  Rational expectation;
  Rational e_star;

  KimVuParams kim_vu(std::uint64_t n, double lambda) const;
};

/// For the total: E_i = sum_{d=i}^{D} bound(E_{d,i}), ell = D. For a fixed d:
/// E_i = bound(E_{d,i}), ell = d. E' = max_i E_i, E* = max(E', expectation).
/// E_{d,1} uses e_d1_bound; larger i use e_di_bound.
BoundChain e_prime_and_star(const CyclicGroup& group, std::uint64_t k, Statistic statistic,
                            const Rational& p);

BigInt binomial(std::uint64_t n, std::uint64_t r);

}  // namespace zsf
