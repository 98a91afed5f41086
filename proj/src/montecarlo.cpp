#include "zsf/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "zsf/structure.hpp"

namespace zsf {

namespace {

// Runs body(t) for t in [0, trials) over contiguous blocks, one per worker.
template <typename Body>
void for_each_trial(std::uint64_t trials, unsigned threads, Body body) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, trials));
  if (workers == 1) {
    for (std::uint64_t t = 0; t < trials; ++t) body(t);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t block = (trials + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * block, hi = std::min(trials, lo + block);
    pool.emplace_back([=, &body] {
      for (std::uint64_t t = lo; t < hi; ++t) body(t);
    });
  }
  for (auto& th : pool) th.join();
}

BigInt to_big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

}  // namespace

void validate(const ExperimentConfig& config) {
  require_structure_range(CyclicGroup(config.n), config.k);
  require_probability(config.p);
  if (config.trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (config.threads == 0) throw std::invalid_argument("threads must be at least 1");
  if (!config.statistic.is_total()) {
    if (config.statistic.d == 0) throw std::out_of_range("d must be at least 1");
  }
  for (Residue a : config.conditioning) {
    if (a == 0) throw std::invalid_argument("conditioning set must exclude 0");
    if (a >= config.n) throw std::out_of_range("conditioning residue outside C_n");
  }
}

double TrialStats::standard_error() const {
  return trials == 0 ? 0.0 : std::sqrt(sample_variance / static_cast<double>(trials));
}

double TrialStats::tail_fraction(double threshold, bool inclusive) const {
  if (counts.empty()) return 0.0;
  const double e = exact_expectation.get_d();
  std::uint64_t hits = 0;
  for (auto c : counts) {
    const double dev = std::fabs(static_cast<double>(c) - e);
    if (inclusive ? dev >= threshold : dev > threshold) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(counts.size());
}

TrialStats run_trials(const ExperimentConfig& config) {
  validate(config);
  const CyclicGroup group(config.n);
  const BernoulliThreshold threshold(config.p);
  const SubsetCounter counter(group, config.k);

  TrialStats stats;
  stats.trials = config.trials;
  stats.quantized_p = threshold.quantized();
  stats.exact_expectation = config.statistic.is_total()
                                ? expectation_total(group, config.k, config.p)
                                : expectation_by_d(group, config.k, config.statistic.d, config.p);
  stats.counts.assign(config.trials, 0);

  for_each_trial(config.trials, config.threads, [&](std::uint64_t t) {
    const SubsetSample sample = sample_subset(group, threshold, config.seed, t);
    const auto r = counter.count(sample.mask);
    if (config.statistic.is_total())
      stats.counts[t] = r.total;
    else
      stats.counts[t] = config.statistic.d < r.by_d.size() ? r.by_d[config.statistic.d] : 0;
  });

  // Exact accumulation in trial order; only the final statistics are rounded.
  stats.sum = 0;
  stats.sum_squares = 0;
  for (auto c : stats.counts) {
    const BigInt v = to_big(c);
    stats.sum += v;
    stats.sum_squares += v * v;
  }
  const Rational trials_q(to_big(config.trials));
  const Rational mean = Rational(stats.sum) / trials_q;
  stats.sample_mean = mean.get_d();
  if (config.trials > 1) {
    Rational var = (Rational(stats.sum_squares) - Rational(stats.sum) * mean) /
                   Rational(to_big(config.trials - 1));
    stats.sample_variance = var.get_d();
  }
  const double e = stats.exact_expectation.get_d();
  for (auto c : stats.counts)
    stats.max_abs_deviation = std::max(stats.max_abs_deviation, std::fabs(static_cast<double>(c) - e));
  for (double thr : config.tail_thresholds) stats.tail_frequencies[thr] = stats.tail_fraction(thr, false);
  return stats;
}

ConditionalEstimate empirical_conditional_expectation(const ExperimentConfig& config,
                                                      std::uint64_t d) {
  validate(config);
  if (config.conditioning.empty())
    throw std::invalid_argument("conditional expectation needs a nonempty set A");
  std::vector<Residue> required = config.conditioning;
  std::sort(required.begin(), required.end());
  required.erase(std::unique(required.begin(), required.end()), required.end());
  if (d == 0 || required.size() > d)
    throw std::invalid_argument("conditioning set larger than d");

  const CyclicGroup group(config.n);
  const BernoulliThreshold threshold(config.p);
  const SubsetCounter counter(group, config.k);
  std::vector<std::uint64_t> counts(config.trials, 0);

  for_each_trial(config.trials, config.threads, [&](std::uint64_t t) {
    SubsetSample sample = sample_subset(group, threshold, config.seed, t);
    for (Residue a : required) sample.mask[a] = 1;
    const auto r = counter.count(sample.mask, required);
    counts[t] = d < r.by_d.size() ? r.by_d[d] : 0;
  });

  BigInt sum = 0, sum_sq = 0;
  for (auto c : counts) {
    sum += to_big(c);
    sum_sq += to_big(c) * to_big(c);
  }
  ConditionalEstimate est;
  est.trials = config.trials;
  const Rational mean = Rational(sum) / Rational(to_big(config.trials));
  est.mean = mean.get_d();
  if (config.trials > 1) {
    const Rational var = (Rational(sum_sq) - Rational(sum) * mean) / Rational(to_big(config.trials - 1));
    est.standard_error = std::sqrt(var.get_d() / static_cast<double>(config.trials));
  }
  return est;
}

bool ConcentrationReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ConcentrationRow& r) { return r.pass; });
}

std::vector<double> default_kim_vu_grid(std::uint64_t ell, std::uint64_t n) {
  const double base = static_cast<double>(ell) * std::log(static_cast<double>(n));
  return {base, 2.0 * base};
}

std::vector<double> default_chernoff_grid() { return {0.1, 0.2, 0.5}; }

ConcentrationReport concentration_report(const ExperimentConfig& config,
                                         const std::vector<double>& kim_vu_grid,
                                         const std::vector<double>& chernoff_grid) {
  ConcentrationReport report;
  report.stats = run_trials(config);
  const CyclicGroup group(config.n);
  report.chain = e_prime_and_star(group, config.k, config.statistic, config.p);

  for (double lambda : kim_vu_grid) {
    const KimVuParams params = report.chain.kim_vu(config.n, lambda);
    ConcentrationRow row;
    row.inequality = "kim-vu";
    row.lambda = lambda;
    row.deviation_threshold = kim_vu_threshold(params);
    const TailBound tb = kim_vu_failure_prob(params);
    row.bound = tb.probability;
    row.vacuous = tb.vacuous;
    row.empirical = report.stats.tail_fraction(row.deviation_threshold, false);
    row.pass = row.vacuous || row.empirical <= row.bound;
    report.rows.push_back(row);
  }

  const bool single_element = !config.statistic.is_total() && config.statistic.d == 1;
  const double e = report.stats.exact_expectation.get_d();
  if (single_element && e > 0) {
    for (double lambda : chernoff_grid) {
      ConcentrationRow row;
      row.inequality = "chernoff";
      row.lambda = lambda;
      row.deviation_threshold = lambda * e;
      const TailBound tb = chernoff_tail(e, lambda);
      row.bound = tb.probability;
      row.vacuous = tb.vacuous;
      row.empirical = report.stats.tail_fraction(row.deviation_threshold, true);
      row.pass = row.vacuous || row.empirical <= row.bound;
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace zsf
