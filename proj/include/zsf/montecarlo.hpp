#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zsf/bounds.hpp"
#include "zsf/cyclic_group.hpp"
#include "zsf/random_model.hpp"
#include "zsf/types.hpp"

namespace zsf {

struct ExperimentConfig {
  std::uint64_t n = 2;
  std::uint64_t k = 0;
  Rational p = 0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  Statistic statistic = Statistic::total();
  /// Residues forced into R (conditional experiments only).
  std::vector<Residue> conditioning;
  /// |count - E| thresholds reported in TrialStats::tail_frequencies.
  std::vector<double> tail_thresholds;
  unsigned threads = 1;
};

/// Throws std::out_of_range / std::invalid_argument on a bad config.
void validate(const ExperimentConfig& config);

struct TrialStats {
  std::uint64_t trials = 0;
  Rational exact_expectation;
  Rational quantized_p;
  BigInt sum;              // exact sum of per-trial counts
  BigInt sum_squares;
  double sample_mean = 0.0;
  double sample_variance = 0.0;   // unbiased, 0 for a single trial
  double max_abs_deviation = 0.0;
  /// threshold -> fraction of trials with |count - E| > threshold
  std::map<double, double> tail_frequencies;
  std::vector<std::uint64_t> counts;   // per trial, in trial order

  double standard_error() const;
  /// Fraction of trials with |count - E| > t, or >= t when inclusive.
  double tail_fraction(double threshold, bool inclusive) const;

  bool operator==(const TrialStats&) const = default;
};

TrialStats run_trials(const ExperimentConfig& config);

struct ConditionalEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t trials = 0;
};

/// Monte Carlo estimate of E_{d,A}: A is forced into R, the remaining residues
/// are sampled, and sequences with d distinct elements whose support contains
/// A and lies in R are counted. Throws std::invalid_argument when A is empty,
/// contains 0, or has more than d elements.
ConditionalEstimate empirical_conditional_expectation(const ExperimentConfig& config,
                                                      std::uint64_t d);

struct ConcentrationRow {
  std::string inequality;   // "kim-vu" or "chernoff"
  double lambda = 0.0;
  double deviation_threshold = 0.0;
  double bound = 0.0;
  bool vacuous = false;
  double empirical = 0.0;
  bool pass = true;
};

struct ConcentrationReport {
  TrialStats stats;
  BoundChain chain;
  std::vector<ConcentrationRow> rows;
  bool all_pass() const;
};

/// Default Kim-Vu grid {ell log n, 2 ell log n}.
std::vector<double> default_kim_vu_grid(std::uint64_t ell, std::uint64_t n);
/// Default Chernoff grid {0.1, 0.2, 0.5}.
std::vector<double> default_chernoff_grid();

/// Compares empirical tails against Kim-Vu for every lambda in kim_vu_grid,
/// and against Chernoff (d = 1 statistic only) for every lambda in
/// chernoff_grid. Vacuous rows are reported but never fail.
ConcentrationReport concentration_report(const ExperimentConfig& config,
                                         const std::vector<double>& kim_vu_grid,
                                         const std::vector<double>& chernoff_grid);

}  // namespace zsf
