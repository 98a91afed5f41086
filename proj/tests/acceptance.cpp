#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zsf/cli.hpp"
#include "zsf/montecarlo.hpp"
#include "zsf/partitions.hpp"
#include "zsf/structure.hpp"

using namespace zsf;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

nlohmann::ordered_json cli_json(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "zsf_cli");
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return code == cli::kExitOk ? nlohmann::ordered_json::parse(out.str()) : nlohmann::ordered_json();
}

ExperimentConfig base_config(Statistic statistic, unsigned threads) {
  ExperimentConfig c;
  c.n = 101;
  c.k = 2;
  c.p = Rational(3, 10);
  c.trials = 100000;
  c.seed = 42;
  c.statistic = statistic;
  c.threads = threads;
  return c;
}

Outcome partition_goldens() {
  const bool ok = q_exact(7, 1) == 2 && q_exact(7, 2) == 11 && q_exact(7, 3) == 2 &&
                  q_exact(7, 4) == 0 && q_exact(7, 5) == 0 && q_exact(7, 7) == 0;
  return {ok, "q(7,1..3) = " + q_exact(7, 1).get_str() + "," + q_exact(7, 2).get_str() + "," +
                  q_exact(7, 3).get_str()};
}

Outcome c8_example() {
  const std::set<std::string> multisets = {
      "1:5", "1:4 2:1", "1:4 3:1", "1:3 2:2", "3:5", "3:4 6:1", "1:1 3:4", "3:3 6:2",
      "5:5", "2:1 5:4", "5:4 7:1", "2:2 5:3", "7:5", "6:1 7:4", "5:1 7:4", "6:2 7:3"};
  const std::map<std::string, std::string> weights = {
      {"1", "1"},   {"3", "1"},   {"5", "1"},   {"7", "1"},   {"1 2", "2"},
      {"1 3", "2"}, {"3 6", "2"}, {"2 5", "2"}, {"5 7", "2"}, {"6 7", "2"}};
  int code = 0;
  const auto e = cli_json({"enumerate", "--n", "8", "--k", "2"}, code);
  if (code != 0) return {false, "enumerate exited " + std::to_string(code)};
  std::set<std::string> got;
  for (const auto& row : e["rows"]) got.insert(row["multiset"].get<std::string>());
  const auto s = cli_json({"support", "--n", "8", "--k", "2"}, code);
  if (code != 0) return {false, "support exited " + std::to_string(code)};
  std::map<std::string, std::string> got_weights;
  for (const auto& row : s["rows"]) got_weights[row["support"].get<std::string>()] = row["weight"].get<std::string>();
  const bool ok = e["rows"].size() == 16 && got == multisets && got_weights == weights;
  return {ok, std::to_string(got.size()) + " multisets, " + std::to_string(got_weights.size()) + " supports"};
}

Outcome structure_equivalence() {
  std::string failures;
  std::size_t cases = 0;
  for (std::uint64_t n = 2; n <= 14; ++n)
    for (std::uint64_t k = 0; k <= n / 3; ++k, ++cases) {
      const auto check = check_structure(CyclicGroup(n), k);
      if (!check.sets_equal())
        failures += " (n=" + std::to_string(n) + ",k=" + std::to_string(k) + ": structured " +
                    std::to_string(check.distinct_structured) + " vs brute force " +
                    std::to_string(check.brute_force) + ")";
    }
  return {failures.empty(), std::to_string(cases) + " cases" + (failures.empty() ? "" : ";" + failures)};
}

Outcome count_formula() {
  std::string failures;
  for (std::uint64_t n = 2; n <= 14; ++n)
    for (std::uint64_t k = 0; k <= n / 3; ++k) {
      if (n == 3 && k == 1) continue;
      const CyclicGroup g(n);
      const auto check = check_structure(g, k);
      std::map<std::uint64_t, BigInt> truth;
      for (const auto& seq : brute_force_enumerate(g, n - 1 - k)) truth[seq.distinct_count()] += 1;
      for (std::uint64_t d = 1; d <= d_max(k) + 1; ++d) {
        const BigInt formula = d <= d_max(k) ? count_n(g, k, d) : BigInt(0);
        const BigInt actual = truth.count(d) ? truth[d] : BigInt(0);
        if (formula != actual) {
          failures += " (n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",d=" + std::to_string(d) +
                      ": formula " + formula.get_str() + " vs " + actual.get_str() + ")";
        }
      }
      if (check.collisions != 0)
        failures += " (n=" + std::to_string(n) + ",k=" + std::to_string(k) + ": collisions)";
    }
  int code = 0;
  cli_json({"verify", "--n", "3", "--k", "1"}, code);
  const bool boundary = code == cli::kExitDiscrepancy;
  if (!boundary) failures += " (verify n=3,k=1 exited " + std::to_string(code) + ")";
  return {failures.empty(), failures.empty() ? "all per-d counts match; n=3,k=1 flagged" : failures.substr(1)};
}

Outcome recursion_identities() {
  for (std::uint64_t k = 0; k <= 60; ++k)
    for (std::uint64_t d = 0; d <= 10; ++d) {
      BigInt sum = 0;
      for (std::uint64_t j = triangular(d); j <= k; ++j) sum += q_exact(j, d);
      if (big_x(k, d) != big_y(k, k, d) || big_x(k, d) != sum)
        return {false, "k=" + std::to_string(k) + " d=" + std::to_string(d)};
    }
  // Young diagrams: partitions of total <= b into at most c rows.
  for (std::uint64_t b = 0; b <= 15; ++b)
    for (std::uint64_t c = 0; c <= 15; ++c) {
      std::vector<BigInt> direct(6, 0);
      for_each_partition_up_to(b, [&](const Partition& p) {
        if (p.size() <= c && p.distinct_parts() <= 5) direct[p.distinct_parts()] += 1;
      });
      for (std::uint64_t d = 0; d <= 5; ++d)
        if (big_y(b, c, d) != direct[d])
          return {false, "Y(" + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) + ")"};
    }
  return {true, "X = Y = sum q for k <= 60, d <= 10; Y direct for b,c <= 15, d <= 5"};
}

Outcome generating_function() {
  const auto table = q_via_gf(30, 7);
  for (std::uint64_t j = 0; j <= 30; ++j)
    for (std::uint64_t d = 0; d <= 7; ++d)
      if (table[j][d] != q_exact(j, d)) return {false, "j=" + std::to_string(j) + " d=" + std::to_string(d)};
  return {true, "j <= 30, d <= 7"};
}

std::string fmt(const char* f, double a, double b, double c) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome monte_carlo_mean() {
  const auto s = run_trials(base_config(Statistic::total(), 1));
  const double e = s.exact_expectation.get_d();
  const bool ok = s.exact_expectation == Rational(57) && std::abs(s.sample_mean - e) <= 4.0 * s.standard_error();
  return {ok, fmt("mean %.5f, exact %.0f, SE %.5f", s.sample_mean, e, s.standard_error())};
}

Outcome report_rows(const ConcentrationReport& rep, const std::string& kind, bool skip_vacuous) {
  std::string detail;
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& row : rep.rows) {
    if (row.inequality != kind) continue;
    if (skip_vacuous && row.vacuous) continue;
    ++checked;
    const bool pass = row.empirical <= row.bound;
    ok = ok && pass;
    detail += fmt(" [lambda %.4g: empirical %.5f <= bound %.5f]", row.lambda, row.empirical, row.bound);
  }
  return {ok && checked > 0, std::to_string(checked) + " rows" + detail};
}

Outcome chernoff_coverage() {
  const auto rep = concentration_report(base_config(Statistic::by_d(1), 1), {}, {0.1, 0.2, 0.5});
  return report_rows(rep, "chernoff", false);
}

Outcome kim_vu_coverage() {
  const auto rep = concentration_report(base_config(Statistic::by_d(2), 1), default_kim_vu_grid(2, 101), {});
  return report_rows(rep, "kim-vu", true);
}

Outcome determinism() {
  const auto a = run_trials(base_config(Statistic::total(), 1));
  const auto b = run_trials(base_config(Statistic::total(), 8));
  return {a == b, a == b ? "threads 1 and 8 identical" : "TrialStats differ"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"partition golden values", partition_goldens},
      {"C_8 worked example", c8_example},
      {"structured vs brute force, n <= 14", structure_equivalence},
      {"count formula vs per-d counts", count_formula},
      {"recursion identities", recursion_identities},
      {"generating function cross-check", generating_function},
      {"Monte Carlo expectation", monte_carlo_mean},
      {"Chernoff coverage", chernoff_coverage},
      {"Kim-Vu coverage", kim_vu_coverage},
      {"determinism across threads", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
