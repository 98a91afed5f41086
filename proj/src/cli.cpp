#include "zsf/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "zsf/bounds.hpp"
#include "zsf/montecarlo.hpp"
#include "zsf/partitions.hpp"
#include "zsf/report.hpp"
#include "zsf/sequence.hpp"
#include "zsf/structure.hpp"

namespace zsf::cli {

namespace {

struct Options {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  std::string p = "1/2";
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string format = "json";
  std::string lambda_grid;
  std::string chernoff_grid;
  std::uint64_t bruteforce_cap = 14;
  std::string out_path;

  // enumerate
  std::string method = "structured";
  bool distinct_only = false;
  bool no_dedupe = false;

  // partitions
  bool want_q = false, want_gf = false, want_x = false, want_y = false;
  std::uint64_t j = 0, j_max = 0, k_max = 0, b = 0, c = 0, d_max_opt = 0;

  // verify
  std::uint64_t n_max = 0;

  // simulate
  std::string conditioning;
};

std::string str(const BigInt& v) { return v.get_str(); }

std::string str(const Rational& v) {
  // Always "numerator/denominator", including integers.
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string join(const std::vector<Residue>& xs, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string join(const std::vector<std::uint64_t>& xs, const char* sep, bool) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::int64_t i64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::vector<Residue> parse_residue_list(const std::string& text) {
  std::vector<Residue> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const auto v = std::stoull(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad residue '" + item + "'");
    out.push_back(v);
  }
  return out;
}

void common_params(OutputRecord& rec, const Options& o) {
  rec.param("n", std::to_string(o.n));
  rec.param("k", std::to_string(o.k));
}

// ---------------------------------------------------------------- commands

OutputRecord cmd_count(const Options& o, bool has_d) {
  const CyclicGroup group(o.n);
  require_structure_range(group, o.k);
  OutputRecord rec;
  rec.command = "count";
  common_params(rec, o);
  rec.param("phi", std::to_string(totient(o.n)));
  rec.param("d_max", std::to_string(d_max(o.k)));
  std::uint64_t lo = 1, hi = d_max(o.k);
  if (has_d) lo = hi = o.d;
  BigInt total = 0;
  for (std::uint64_t d = lo; d <= hi; ++d) {
    const BigInt c = count_n(group, o.k, d);
    total += c;
    Row row;
    row.set("d", i64(d)).set("x_k_d_minus_1", str(big_x(o.k, d - 1))).set("count", str(c));
    rec.rows.push_back(std::move(row));
  }
  if (!has_d) rec.param("total", str(total));
  return rec;
}

OutputRecord cmd_expect(const Options& o, bool has_d) {
  const CyclicGroup group(o.n);
  const Rational p = parse_rational(o.p);
  require_probability(p);
  require_structure_range(group, o.k);
  OutputRecord rec;
  rec.command = "expect";
  common_params(rec, o);
  rec.param("p", str(p));

  auto add = [&](const std::string& quantity, std::optional<std::uint64_t> d, const Rational& v) {
    Row row;
    row.set("quantity", quantity);
    row.set("d", d ? Value(i64(*d)) : Value(std::string()));
    row.set("value", str(v));
    rec.rows.push_back(std::move(row));
  };
  if (has_d) {
    add("by_d", o.d, expectation_by_d(group, o.k, o.d, p));
    return rec;
  }
  add("total", std::nullopt, expectation_total(group, o.k, p));
  for (std::uint64_t d = 1; d <= d_max(o.k); ++d) add("by_d", d, expectation_by_d(group, o.k, d, p));
  const auto first = expectation_first_order(group, o.k, p);
  add("leading", std::nullopt, first.leading);
  add("correction_coefficient", std::nullopt, first.correction_coefficient);
  return rec;
}

OutputRecord cmd_enumerate(const Options& o) {
  const CyclicGroup group(o.n);
  OutputRecord rec;
  rec.command = "enumerate";
  common_params(rec, o);
  rec.param("method", o.method);
  rec.param("length", std::to_string(o.n >= 1 + o.k ? o.n - 1 - o.k : 0));

  if (o.method == "brute") {
    if (o.n > o.bruteforce_cap)
      throw std::invalid_argument("brute-force enumeration is capped at n <= " +
                                  std::to_string(o.bruteforce_cap) + " (see --bruteforce-cap)");
    require_structure_range(group, o.k);
    const auto all = brute_force_enumerate(group, o.n - 1 - o.k, o.threads);
    rec.param("distinct_multisets", std::to_string(all.size()));
    for (const auto& s : all) {
      Row row;
      row.set("multiset", s.to_string()).set("distinct", i64(s.distinct_count()));
      rec.rows.push_back(std::move(row));
    }
    return rec;
  }
  if (o.method != "structured") throw std::invalid_argument("unknown method '" + o.method + "'");

  const bool dedupe = !o.no_dedupe;
  const auto e = enumerate_structured(group, o.k, dedupe);
  rec.param("configurations", std::to_string(e.entries.size()));
  if (dedupe) {
    rec.param("distinct_multisets", std::to_string(e.distinct.size()));
    rec.param("collisions", std::to_string(e.collisions.size()));
  }
  if (o.distinct_only && dedupe) {
    for (const auto& s : e.distinct) {
      Row row;
      row.set("multiset", s.to_string()).set("distinct", i64(s.distinct_count()));
      rec.rows.push_back(std::move(row));
    }
    return rec;
  }
  for (const auto& entry : e.entries) {
    Row row;
    row.set("generator", i64(entry.configuration.generator()))
        .set("x", join(entry.configuration.x(), " ", true))
        .set("partition", entry.configuration.shifted_partition().to_string())
        .set("multiset", entry.multiset.to_string())
        .set("distinct", i64(entry.multiset.distinct_count()));
    rec.rows.push_back(std::move(row));
  }
  return rec;
}

OutputRecord cmd_support(const Options& o) {
  const CyclicGroup group(o.n);
  const auto map = support_map(group, o.k);
  OutputRecord rec;
  rec.command = "support";
  common_params(rec, o);
  rec.param("hyperedges", std::to_string(map.size()));
  rec.param("total_weight", str(map.total()));
  for (const auto& cls : support_classes(group, o.k)) {
    Row row;
    row.set("support", join(cls.support))
        .set("size", i64(cls.support.size()))
        .set("weight", str(cls.weight));
    rec.rows.push_back(std::move(row));
  }
  return rec;
}

OutputRecord cmd_partitions(const Options& o, const CLI::App& sub) {
  OutputRecord rec;
  rec.command = "partitions";
  const int modes = int(o.want_q) + int(o.want_gf) + int(o.want_x) + int(o.want_y);
  if (modes != 1) throw std::invalid_argument("choose exactly one of --q, --gf, --x, --y");
  const bool has_dmax = sub.count("--d-max") > 0;

  if (o.want_q || o.want_gf) {
    const bool single = sub.count("--j") > 0;
    const bool table = sub.count("--j-max") > 0;
    if (single == table) throw std::invalid_argument("give exactly one of --j or --j-max");
    const std::uint64_t top = single ? o.j : o.j_max;
    const std::uint64_t dmax = has_dmax ? o.d_max_opt : d_max(top);
    rec.param("table", o.want_gf ? "q_via_gf" : "q");
    rec.param("d_max", std::to_string(dmax));
    std::vector<std::vector<BigInt>> gf;
    if (o.want_gf) gf = q_via_gf(std::max<std::uint64_t>(top, 1), dmax);
    const std::uint64_t first = single ? top : 1;
    for (std::uint64_t j = first; j <= top; ++j) {
      Row row;
      row.set("j", i64(j));
      for (std::uint64_t d = 1; d <= dmax; ++d)
        row.set("d" + std::to_string(d), str(o.want_gf ? gf[j][d] : q_exact(j, d)));
      rec.rows.push_back(std::move(row));
    }
    return rec;
  }
  if (o.want_x) {
    const bool single = sub.count("--k") > 0;
    const bool table = sub.count("--k-max") > 0;
    if (single == table) throw std::invalid_argument("give exactly one of --k or --k-max");
    const std::uint64_t top = single ? o.k : o.k_max;
    std::uint64_t dmax = has_dmax ? o.d_max_opt : d_max(top) - 1;
    rec.param("table", "X");
    rec.param("d_max", std::to_string(dmax));
    for (std::uint64_t k = single ? top : 0; k <= top; ++k) {
      Row row;
      row.set("k", i64(k));
      for (std::uint64_t d = 0; d <= dmax; ++d) row.set("d" + std::to_string(d), str(big_x(k, d)));
      rec.rows.push_back(std::move(row));
    }
    return rec;
  }
  // --y
  if (sub.count("--b") == 0 || sub.count("--c") == 0)
    throw std::invalid_argument("--y needs --b and --c");
  const std::uint64_t dmax = has_dmax ? o.d_max_opt : d_max(o.b) - 1;
  rec.param("table", "Y");
  rec.param("d_max", std::to_string(dmax));
  Row row;
  row.set("b", i64(o.b)).set("c", i64(o.c));
  for (std::uint64_t d = 0; d <= dmax; ++d) row.set("d" + std::to_string(d), str(big_y(o.b, o.c, d)));
  rec.rows.push_back(std::move(row));
  return rec;
}

Row bound_row(const std::string& kind, std::optional<std::uint64_t> d,
              std::optional<std::uint64_t> i, std::optional<double> lambda, const std::string& value,
              bool exact, std::optional<bool> vacuous = std::nullopt) {
  Row row;
  row.set("kind", kind);
  row.set("d", d ? Value(i64(*d)) : Value(std::string()));
  row.set("i", i ? Value(i64(*i)) : Value(std::string()));
  row.set("lambda", lambda ? Value(*lambda) : Value(std::string()));
  row.set("value", value);
  row.set("exact", exact);
  row.set("vacuous", vacuous ? Value(*vacuous) : Value(std::string()));
  return row;
}

OutputRecord cmd_bounds(const Options& o, bool has_d) {
  const CyclicGroup group(o.n);
  const Rational p = parse_rational(o.p);
  const Statistic stat = has_d ? Statistic::by_d(o.d) : Statistic::total();
  const BoundChain chain = e_prime_and_star(group, o.k, stat, p);

  OutputRecord rec;
  rec.command = "bounds";
  common_params(rec, o);
  rec.param("p", str(p));
  rec.param("statistic", stat.name());
  rec.param("ell", std::to_string(chain.ell));

  const std::uint64_t top = d_max(o.k);
  for (std::uint64_t d = has_d ? o.d : 1; d <= (has_d ? o.d : top); ++d)
    for (std::uint64_t i = 1; i <= d; ++i) {
      const Rational v = i == 1 ? e_d1_bound(o.k, d, p) : e_di_bound(o.k, d, i, p);
      rec.rows.push_back(bound_row("E_d_i", d, i, std::nullopt, str(v), true));
    }
  for (std::size_t i = 0; i < chain.e_by_i.size(); ++i)
    rec.rows.push_back(bound_row("E_i", std::nullopt, i + 1, std::nullopt, str(chain.e_by_i[i]), true));
  rec.rows.push_back(bound_row("E_prime", std::nullopt, std::nullopt, std::nullopt, str(chain.e_prime), true));
  rec.rows.push_back(bound_row("expectation", std::nullopt, std::nullopt, std::nullopt, str(chain.expectation), true));
  rec.rows.push_back(bound_row("E_star", std::nullopt, std::nullopt, std::nullopt, str(chain.e_star), true));

  const auto grid = o.lambda_grid.empty() ? default_kim_vu_grid(chain.ell, o.n) : parse_double_list(o.lambda_grid);
  for (double lambda : grid) {
    const auto params = chain.kim_vu(o.n, lambda);
    const auto tb = kim_vu_failure_prob(params);
    rec.rows.push_back(bound_row("kim_vu_threshold", std::nullopt, std::nullopt, lambda,
                                 format_double(kim_vu_threshold(params)), false));
    rec.rows.push_back(bound_row("kim_vu_failure_prob", std::nullopt, std::nullopt, lambda,
                                 format_double(tb.probability), false, tb.vacuous));
  }
  if (has_d && o.d == 1 && chain.expectation > 0) {
    const auto cgrid = o.chernoff_grid.empty() ? default_chernoff_grid() : parse_double_list(o.chernoff_grid);
    for (double lambda : cgrid) {
      const auto tb = chernoff_tail(chain.expectation.get_d(), lambda);
      rec.rows.push_back(bound_row("chernoff_tail", std::nullopt, std::nullopt, lambda,
                                   format_double(tb.probability), false, tb.vacuous));
    }
  }
  return rec;
}

OutputRecord cmd_simulate(const Options& o, bool has_d) {
  ExperimentConfig cfg;
  cfg.n = o.n;
  cfg.k = o.k;
  cfg.p = parse_rational(o.p);
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  cfg.statistic = has_d ? Statistic::by_d(o.d) : Statistic::total();
  cfg.conditioning = parse_residue_list(o.conditioning);

  OutputRecord rec;
  rec.command = "simulate";
  common_params(rec, o);
  rec.param("p", str(cfg.p));
  rec.param("trials", std::to_string(cfg.trials));
  rec.param("seed", std::to_string(cfg.seed));
  rec.param("statistic", cfg.statistic.name());

  if (!cfg.conditioning.empty()) {
    if (!has_d) throw std::invalid_argument("--conditioning needs --d");
    rec.param("conditioning", join(cfg.conditioning, ","));
    const auto est = empirical_conditional_expectation(cfg, o.d);
    Row row;
    row.set("kind", std::string("conditional_expectation"))
        .set("mean", est.mean)
        .set("standard_error", est.standard_error)
        .set("trials", i64(est.trials));
    const auto top = d_max(cfg.k);
    if (o.d <= top) {
      const auto i = static_cast<std::uint64_t>(cfg.conditioning.size());
      const Rational b = i == 1 ? e_d1_bound(cfg.k, o.d, cfg.p) : e_di_bound(cfg.k, o.d, i, cfg.p);
      row.set("bound", str(b));
    }
    rec.rows.push_back(std::move(row));
    return rec;
  }

  const std::uint64_t ell = has_d ? o.d : d_max(cfg.k);
  const auto kv_grid = o.lambda_grid.empty() ? default_kim_vu_grid(ell, cfg.n) : parse_double_list(o.lambda_grid);
  const auto ch_grid = o.chernoff_grid.empty() ? default_chernoff_grid() : parse_double_list(o.chernoff_grid);
  const auto report = concentration_report(cfg, kv_grid, ch_grid);
  const auto& s = report.stats;
  rec.param("quantized_p", str(s.quantized_p));

  Row stats;
  stats.set("kind", std::string("stats"))
      .set("trials", i64(s.trials))
      .set("exact_expectation", str(s.exact_expectation))
      .set("sum", str(s.sum))
      .set("sum_squares", str(s.sum_squares))
      .set("sample_mean", s.sample_mean)
      .set("sample_variance", s.sample_variance)
      .set("standard_error", s.standard_error())
      .set("max_abs_deviation", s.max_abs_deviation);
  rec.rows.push_back(std::move(stats));
  for (const auto& r : report.rows) {
    Row row;
    row.set("kind", r.inequality)
        .set("lambda", r.lambda)
        .set("deviation_threshold", r.deviation_threshold)
        .set("bound", r.bound)
        .set("vacuous", r.vacuous)
        .set("empirical", r.empirical)
        .set("pass", r.pass);
    rec.rows.push_back(std::move(row));
  }
  rec.param("all_pass", report.all_pass() ? "true" : "false");
  return rec;
}

OutputRecord cmd_verify(const Options& o, bool has_n, bool has_k, std::ostream& err, bool& discrepancy) {
  std::uint64_t n_lo, n_hi;
  if (has_n) {
    n_lo = n_hi = o.n;
  } else if (o.n_max >= 2) {
    n_lo = 2;
    n_hi = o.n_max;
  } else {
    throw std::invalid_argument("verify needs --n or --n-max >= 2");
  }
  if (n_hi > o.bruteforce_cap)
    throw std::invalid_argument("verify uses brute force, capped at n <= " +
                                std::to_string(o.bruteforce_cap) + " (see --bruteforce-cap)");

  OutputRecord rec;
  rec.command = "verify";
  rec.param("n_min", std::to_string(n_lo));
  rec.param("n_max", std::to_string(n_hi));
  discrepancy = false;
  std::size_t checked = 0, failed = 0;
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    const CyclicGroup group(n);
    if (has_k) require_structure_range(group, o.k);
    const std::uint64_t k_lo = has_k ? o.k : 0, k_hi = has_k ? o.k : n / 3;
    for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
      const auto check = check_structure(group, k, o.threads);
      ++checked;
      BigInt formula = 0, distinct = 0;
      std::ostringstream issues;
      for (const auto& [d, pair] : check.per_d) {
        formula += pair.first;
        distinct += pair.second;
        if (pair.first != pair.second)
          issues << "d=" << d << ": formula " << pair.first.get_str() << " vs distinct "
                 << pair.second.get_str() << "; ";
      }
      if (formula != distinct)
        issues << "formula " << formula.get_str() << " vs distinct multisets " << distinct.get_str() << "; ";
      if (check.collisions) issues << check.collisions << " collision(s); ";
      if (!check.missing.empty()) issues << check.missing.size() << " missed by structure; ";
      if (!check.extra.empty()) issues << check.extra.size() << " not found by brute force; ";
      if (!check.not_zero_sum_free.empty())
        issues << check.not_zero_sum_free.size() << " structured multiset(s) not zero-sum free; ";

      if (formula != static_cast<unsigned long>(check.brute_force))
        issues << "formula " << formula.get_str() << " vs brute force " << check.brute_force << "; ";
      std::string issue_text = issues.str();
      if (issue_text.size() >= 2) issue_text.resize(issue_text.size() - 2);

      const bool ok = check.ok();
      if (!ok) {
        ++failed;
        discrepancy = true;
        err << "discrepancy at n=" << n << " k=" << k << ": " << issue_text << '\n';
        for (const auto& s : check.missing) err << "  missing " << s.to_string() << '\n';
        for (const auto& s : check.extra) err << "  extra " << s.to_string() << '\n';
      }
      Row row;
      row.set("n", i64(n))
          .set("k", i64(k))
          .set("configurations", i64(check.configurations))
          .set("distinct_structured", i64(check.distinct_structured))
          .set("brute_force", i64(check.brute_force))
          .set("collisions", i64(check.collisions))
          .set("missing", i64(check.missing.size()))
          .set("extra", i64(check.extra.size()))
          .set("formula_total", str(formula))
          .set("distinct_total", str(distinct))
          .set("status", std::string(ok ? "ok" : "discrepancy"))
          .set("discrepancy", issue_text);
      rec.rows.push_back(std::move(row));
    }
  }
  rec.param("cases", std::to_string(checked));
  rec.param("discrepancies", std::to_string(failed));
  return rec;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out_path, "Write the record to this file instead of stdout");
}

void add_nk(CLI::App* sub, Options& o, bool required = true) {
  auto* n = sub->add_option("--n", o.n, "Group order");
  auto* k = sub->add_option("--k", o.k, "Length offset; sequences have length n-1-k");
  if (required) {
    n->required();
    k->required();
  }
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto fail = [&] { throw std::invalid_argument("cannot parse '" + text + "' as an exact rational"); };
  if (text.empty()) fail();
  auto digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  std::string body = text;
  bool negative = false;
  if (body[0] == '-' || body[0] == '+') {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!digits(num) || !digits(den)) fail();
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    out = Rational(BigInt(num), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    const std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if ((!whole.empty() && !digits(whole)) || (!frac.empty() && !digits(frac)) ||
        (whole.empty() && frac.empty()))
      fail();
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    out = Rational(BigInt(whole.empty() ? "0" : whole) * den + BigInt(frac.empty() ? "0" : frac), den);
  } else {
    if (!digits(body)) fail();
    out = Rational(BigInt(body));
  }
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const double v = std::stod(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact counts, expectations and concentration checks for long zero-sum free "
               "sequences over cyclic groups"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Representation counts phi(n) X(k, d-1)");
  add_nk(count, o);
  count->add_option("--d", o.d, "Distinct-element count");
  add_common(count, o);

  auto* expect = app.add_subcommand("expect", "Exact expectations in the random subset model");
  add_nk(expect, o);
  expect->add_option("--d", o.d, "Distinct-element count");
  expect->add_option("--p", o.p, "Inclusion probability (a/b or decimal)")->required();
  add_common(expect, o);

  auto* enumerate = app.add_subcommand("enumerate", "List zero-sum free sequences of length n-1-k");
  add_nk(enumerate, o);
  enumerate->add_option("--method", o.method, "structured or brute")->check(CLI::IsMember({"structured", "brute"}));
  enumerate->add_flag("--distinct", o.distinct_only, "Emit deduplicated multisets only");
  enumerate->add_flag("--no-dedupe", o.no_dedupe, "Skip deduplication and collision reporting");
  enumerate->add_option("--bruteforce-cap", o.bruteforce_cap, "Largest n for brute force");
  enumerate->add_option("--threads", o.threads, "Worker threads");
  add_common(enumerate, o);

  auto* support = app.add_subcommand("support", "Hyperedge supports and weights");
  add_nk(support, o);
  add_common(support, o);

  auto* partitions = app.add_subcommand("partitions", "q, X and Y tables");
  partitions->add_flag("--q", o.want_q, "q(j, d) by recurrence");
  partitions->add_flag("--gf", o.want_gf, "q(j, d) from the generating function");
  partitions->add_flag("--x", o.want_x, "X(k, d)");
  partitions->add_flag("--y", o.want_y, "Y(b, c, d)");
  partitions->add_option("--j", o.j, "Single row j");
  partitions->add_option("--j-max", o.j_max, "Rows j = 1..j-max");
  partitions->add_option("--k", o.k, "Single row k");
  partitions->add_option("--k-max", o.k_max, "Rows k = 0..k-max");
  partitions->add_option("--b", o.b, "Box bound for Y");
  partitions->add_option("--c", o.c, "Row bound for Y");
  partitions->add_option("--d-max", o.d_max_opt, "Largest d column");
  add_common(partitions, o);

  auto* bounds = app.add_subcommand("bounds", "E_{d,i}, E', E*, Kim-Vu and Chernoff values");
  add_nk(bounds, o);
  bounds->add_option("--p", o.p, "Inclusion probability")->required();
  bounds->add_option("--d", o.d, "Fixed-d statistic (default: total)");
  bounds->add_option("--lambda-grid", o.lambda_grid, "Comma-separated Kim-Vu lambdas");
  bounds->add_option("--chernoff-grid", o.chernoff_grid, "Comma-separated Chernoff lambdas");
  add_common(bounds, o);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo trials and concentration report");
  add_nk(simulate, o);
  simulate->add_option("--p", o.p, "Inclusion probability")->required();
  simulate->add_option("--d", o.d, "Fixed-d statistic (default: total)");
  simulate->add_option("--trials", o.trials, "Number of trials");
  simulate->add_option("--seed", o.seed, "64-bit seed");
  simulate->add_option("--threads", o.threads, "Worker threads");
  simulate->add_option("--lambda-grid", o.lambda_grid, "Comma-separated Kim-Vu lambdas");
  simulate->add_option("--chernoff-grid", o.chernoff_grid, "Comma-separated Chernoff lambdas");
  simulate->add_option("--conditioning", o.conditioning, "Comma-separated set A forced into R");
  add_common(simulate, o);

  auto* verify = app.add_subcommand("verify", "Structure vs brute force, formula vs distinct counts");
  verify->add_option("--n", o.n, "Single group order");
  verify->add_option("--k", o.k, "Single k (default: all k <= n/3)");
  verify->add_option("--n-max", o.n_max, "Sweep n = 2..n-max");
  verify->add_option("--bruteforce-cap", o.bruteforce_cap, "Largest n for brute force");
  verify->add_option("--threads", o.threads, "Worker threads");
  add_common(verify, o);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("zsf");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  int status = kExitOk;
  OutputRecord rec;
  try {
    if (o.threads == 0) throw std::invalid_argument("--threads must be at least 1");
    if (count->parsed()) {
      rec = cmd_count(o, count->count("--d") > 0);
    } else if (expect->parsed()) {
      rec = cmd_expect(o, expect->count("--d") > 0);
    } else if (enumerate->parsed()) {
      rec = cmd_enumerate(o);
    } else if (support->parsed()) {
      rec = cmd_support(o);
    } else if (partitions->parsed()) {
      rec = cmd_partitions(o, *partitions);
    } else if (bounds->parsed()) {
      rec = cmd_bounds(o, bounds->count("--d") > 0);
    } else if (simulate->parsed()) {
      rec = cmd_simulate(o, simulate->count("--d") > 0);
    } else if (verify->parsed()) {
      bool discrepancy = false;
      rec = cmd_verify(o, verify->count("--n") > 0, verify->count("--k") > 0, err, discrepancy);
      if (discrepancy) status = kExitDiscrepancy;
    }
  } catch (const std::logic_error& e) {
    // out_of_range and invalid_argument: bad parameters.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::string body = o.format == "csv" ? rec.to_csv() : rec.to_json().dump(2) + "\n";
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "error: cannot write " << o.out_path << '\n';
      return kExitUsage;
    }
    file << body;
  } else {
    out << body;
  }
  return status;
}

}  // namespace zsf::cli
