#include "zsf/cyclic_group.hpp"

#include <numeric>
#include <stdexcept>

namespace zsf {

CyclicGroup::CyclicGroup(std::uint64_t order) : n_(order) {
  if (order == 0) throw std::invalid_argument("cyclic group order must be positive");
}

Residue CyclicGroup::add(Residue a, Residue b) const noexcept {
  // a, b < n so a + (b - n) wraps correctly even near the top of the word.
  return a >= n_ - b ? a - (n_ - b) : a + b;
}

Residue CyclicGroup::scalar_mul(std::uint64_t c, Residue a) const noexcept {
  const unsigned __int128 prod = static_cast<unsigned __int128>(c % n_) * a;
  return static_cast<Residue>(prod % n_);
}

std::vector<Residue> CyclicGroup::generators() const {
  std::vector<Residue> out;
  if (n_ < 2) return out;
  out.reserve(totient(n_));
  for (Residue u = 1; u < n_; ++u)
    if (std::gcd(u, n_) == 1) out.push_back(u);
  return out;
}

bool CyclicGroup::is_generator(Residue a) const noexcept {
  return n_ >= 2 && a < n_ && a != 0 && std::gcd(a, n_) == 1;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept { return std::gcd(a, b); }

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("totient is defined for n >= 1");
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p <= m / p; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace zsf
