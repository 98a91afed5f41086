#include "zsf/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zsf/partitions.hpp"
#include "zsf/structure.hpp"

namespace zsf {

namespace {

Rational power(const Rational& p, std::uint64_t e) {
  Rational out = 1;
  for (std::uint64_t i = 0; i < e; ++i) out *= p;
  return out;
}

void require_lambda_above_one(double lambda) {
  if (!(lambda > 1.0))
    throw std::out_of_range("Kim-Vu needs lambda > 1, got " + std::to_string(lambda));
}

}  // namespace

std::string Statistic::name() const {
  return is_total() ? std::string("total") : "d=" + std::to_string(d);
}

BigInt binomial(std::uint64_t n, std::uint64_t r) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

double a_ell(std::uint64_t ell) {
  if (ell == 0) throw std::out_of_range("ell must be at least 1");
  return std::pow(8.0, static_cast<double>(ell)) *
         std::exp(0.5 * std::lgamma(static_cast<double>(ell) + 1.0));
}

double kim_vu_threshold(const KimVuParams& params) {
  require_lambda_above_one(params.lambda);
  return a_ell(params.ell) * std::sqrt(params.e_prime * params.e_star) *
         std::pow(params.lambda, static_cast<double>(params.ell));
}

TailBound kim_vu_failure_prob(const KimVuParams& params) {
  require_lambda_above_one(params.lambda);
  const double log_bound = std::log(2.0) - params.lambda + 2.0 +
                           static_cast<double>(params.ell - 1) *
                               std::log(static_cast<double>(params.n));
  const double prob = std::exp(log_bound);
  return {prob, prob >= 1.0};
}

TailBound chernoff_tail(double expectation, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::out_of_range("Chernoff needs 0 < lambda < 1, got " + std::to_string(lambda));
  if (!(expectation > 0.0)) throw std::out_of_range("Chernoff needs a positive expectation");
  const double prob = 2.0 * std::exp(-lambda * lambda * expectation / 3.0);
  return {prob, prob >= 1.0};
}

Rational e_d1_bound(std::uint64_t k, std::uint64_t d, const Rational& p) {
  require_probability(p);
  if (d == 0 || d > d_max(k))
    throw std::out_of_range("E_{d,1} needs 1 <= d <= d_max(k) = " + std::to_string(d_max(k)));
  if (d == 1) return 1;
  // d >= 2 forces k >= 1.
  const BigInt inner =
      big_x(k, d - 1) + BigInt(static_cast<unsigned long>(k)) * (big_x(k - 1, d - 1) + big_x(k - 1, d - 2));
  return power(p, d - 1) * Rational(inner);
}

Rational e_di_bound(std::uint64_t k, std::uint64_t d, std::uint64_t i, const Rational& p) {
  require_probability(p);
  if (i == 0) throw std::out_of_range("E_{d,i} needs i >= 1");
  if (i > d) throw std::out_of_range("E_{d,i} needs i <= d");
  if (d > d_max(k))
    throw std::out_of_range("E_{d,i} needs d <= d_max(k) = " + std::to_string(d_max(k)));
  if (i == d) return 1;
  const BigInt choices = BigInt(static_cast<unsigned long>(i)) * binomial(k, i - 1) + binomial(k, i);
  BigInt xs = 0;
  for (std::uint64_t j = 0; j <= i && j + 1 <= d; ++j) xs += big_x(k - i + 1, d - 1 - j);
  return power(p, d - i) * Rational(choices * xs);
}

KimVuParams BoundChain::kim_vu(std::uint64_t n, double lambda) const {
  return {ell, lambda, n, e_prime.get_d(), e_star.get_d()};
}

BoundChain e_prime_and_star(const CyclicGroup& group, std::uint64_t k, Statistic statistic,
                            const Rational& p) {
  require_structure_range(group, k);
  require_probability(p);
  auto bound = [&](std::uint64_t d, std::uint64_t i) {
    return i == 1 ? e_d1_bound(k, d, p) : e_di_bound(k, d, i, p);
  };

  BoundChain chain;
  chain.statistic = statistic;
  const std::uint64_t top = d_max(k);
  if (statistic.is_total()) {
    chain.ell = top;
    for (std::uint64_t i = 1; i <= top; ++i) {
      Rational sum = 0;
      for (std::uint64_t d = i; d <= top; ++d) sum += bound(d, i);
      chain.e_by_i.push_back(sum);
    }
    chain.expectation = expectation_total(group, k, p);
  } else {
    const std::uint64_t d = statistic.d;
    if (d == 0 || d > top)
      throw std::out_of_range("d must satisfy 1 <= d <= d_max(k) = " + std::to_string(top));
    chain.ell = d;
    for (std::uint64_t i = 1; i <= d; ++i) chain.e_by_i.push_back(bound(d, i));
    chain.expectation = expectation_by_d(group, k, d, p);
  }
  chain.e_prime = *std::max_element(chain.e_by_i.begin(), chain.e_by_i.end());
  chain.e_star = std::max(chain.e_prime, chain.expectation);
  return chain;
}

}  // namespace zsf
