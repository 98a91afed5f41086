#pragma once

#include <cstdint>
#include <vector>

#include "zsf/types.hpp"

namespace zsf {

/// The cyclic group C_n, with elements represented as residues mod n.
class CyclicGroup {
 public:
  /// Throws std::invalid_argument for n == 0.
  explicit CyclicGroup(std::uint64_t order);

  std::uint64_t order() const noexcept { return n_; }

  bool contains(Residue a) const noexcept { return a < n_; }

  Residue add(Residue a, Residue b) const noexcept;

  /// c * a mod n, for any nonnegative multiplier c.
  Residue scalar_mul(std::uint64_t c, Residue a) const noexcept;

  /// Ascending residues coprime to n. For n == 1 the trivial group has no
  /// generator in [1, n-1]; the list is empty.
  std::vector<Residue> generators() const;

  bool is_generator(Residue a) const noexcept;

  bool operator==(const CyclicGroup&) const = default;

 private:
  std::uint64_t n_;
};

/// Euler's totient by trial-division factorization; totient(1) == 1.
std::uint64_t totient(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace zsf
