#pragma once

// Subcommands of the `fundstring` CLI. Each command writes to the given
// streams and returns the process exit code:
//   0 success, 1 verification mismatch, 2 usage or parse error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fundstring/fundstring.hpp"

namespace fundstring::cli {

enum class OutputFormat { Plain, Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct Query {
  Family family = Family::C;
  int rank = 2;
  int k = 0;
  std::optional<int> p;
  std::string variant = "string";
  std::optional<Weight> weight;
  OutputFormat output = OutputFormat::Plain;
  bool force = false;
};

/// Label named by a query. "split" maps to the reducible pi_{k,n}; callers
/// that need a single component use "split+" (k w1 + 2w_n) or "split-".
inline StringLabel make_label(Query const& q) {
  LieType const lie(q.family, q.rank);
  if (q.variant == "string") {
    if (!q.p) throw Error("--p is required for variant string");
    return {lie, q.k, *q.p};
  }
  if (q.variant == "spin+") return StringLabel::spin_plus(lie, q.k);
  if (q.variant == "spin-") return StringLabel::spin_minus(lie, q.k);
  if (q.variant == "split" || q.variant == "split+" || q.variant == "split-") {
    if (q.family != Family::D) throw Error("split variants require family D");
    if (q.variant == "split") return {lie, q.k, q.rank};
    return {lie, q.k, q.rank, q.variant == "split+" ? Variant::SplitTop : Variant::SplitBottom};
  }
  throw Error("unknown variant '" + q.variant + "' (expected string, spin+, spin-, split, split+, split-)");
}

namespace detail {

inline std::string csv_quote(std::string const& s) { return "\"" + s + "\""; }

inline nlohmann::json label_json(Query const& q, StringLabel const& label) {
  return {{"family", std::string(1, family_char(q.family))},
          {"rank", q.rank},
          {"k", q.k},
          {"p", label.p()},
          {"variant", q.variant}};
}

}  // namespace detail

inline int cmd_mult(Query const& q, std::ostream& out, std::ostream& err) {
  try {
    if (!q.weight) throw Error("--weight is required");
    StringLabel const label = make_label(q);
    Weight const& mu = *q.weight;
    if (label.lie().family() != Family::A) require_rank(label.lie(), mu);

    std::optional<std::pair<BigInt, BigInt>> split;
    BigInt m;
    if (q.variant == "split") {
      split = split_D_top(q.rank, q.k, mu);
      m = split->first + split->second;
    } else {
      m = multiplicity(label, mu);
    }

    switch (q.output) {
      case OutputFormat::Plain:
        if (split) {
          out << split->first << ' ' << split->second << '\n';
        } else {
          out << m << '\n';
        }
        break;
      case OutputFormat::Json: {
        auto doc = detail::label_json(q, label);
        doc["weight"] = mu.coordinate_strings();
        doc["multiplicity"] = m.str();
        if (split) doc["split"] = {split->first.str(), split->second.str()};
        out << doc.dump() << '\n';
        break;
      }
      case OutputFormat::Csv:
        out << "family,rank,k,p,variant,weight,multiplicity" << (split ? ",split_minus,split_plus" : "") << '\n';
        out << family_char(q.family) << ',' << q.rank << ',' << q.k << ',' << label.p() << ',' << q.variant << ','
            << detail::csv_quote(mu.to_string()) << ',' << m;
        if (split) out << ',' << split->first << ',' << split->second;
        out << '\n';
        break;
    }
    return kExitOk;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

/// Every weight with its closed-form multiplicity, then a footer comparing
/// the weighted total with the Weyl dimension. Exit 1 when they differ.
inline int cmd_diagram(Query const& q, std::ostream& out, std::ostream& err) {
  try {
    if (q.variant == "split") throw Error("diagram needs a single component: use split+ or split-");
    if (!q.force && (q.rank > 8 || q.k > 64)) {
      throw Error("diagram is limited to rank <= 8 and k <= 64; pass --force to override");
    }
    StringLabel const label = make_label(q);
    BigInt total = 0;
    nlohmann::json rows = nlohmann::json::array();

    if (q.output == OutputFormat::Csv) out << "weight,multiplicity\n";
    for_each_closed_weight(label, [&](Weight const& w, BigInt const& m) {
      total += m;
      switch (q.output) {
        case OutputFormat::Plain: out << w.to_string() << '\t' << m << '\n'; break;
        case OutputFormat::Csv: out << detail::csv_quote(w.to_string()) << ',' << m << '\n'; break;
        case OutputFormat::Json: rows.push_back({{"weight", w.coordinate_strings()}, {"multiplicity", m.str()}}); break;
      }
    });
    BigInt const dim = weyl_dimension(label);

    switch (q.output) {
      case OutputFormat::Plain: out << "total " << total << " dimension " << dim << '\n'; break;
      case OutputFormat::Csv: out << "total," << total << "\ndimension," << dim << '\n'; break;
      case OutputFormat::Json: {
        auto doc = detail::label_json(q, label);
        doc["weights"] = std::move(rows);
        doc["total"] = total.str();
        doc["dimension"] = dim.str();
        out << doc.dump() << '\n';
        break;
      }
    }
    if (total != dim) {
      err << "error: weighted weight count " << total << " differs from Weyl dimension " << dim << '\n';
      return kExitMismatch;
    }
    return kExitOk;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

inline int cmd_dim(Query const& q, std::ostream& out, std::ostream& err) {
  try {
    StringLabel const label = make_label(q);
    BigInt const dim = weyl_dimension(label);
    switch (q.output) {
      case OutputFormat::Plain: out << dim << '\n'; break;
      case OutputFormat::Json: {
        auto doc = detail::label_json(q, label);
        doc["dimension"] = dim.str();
        out << doc.dump() << '\n';
        break;
      }
      case OutputFormat::Csv:
        out << "family,rank,k,p,variant,dimension\n"
            << family_char(q.family) << ',' << q.rank << ',' << q.k << ',' << label.p() << ',' << q.variant << ','
            << dim << '\n';
        break;
    }
    return kExitOk;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

struct VerifyOptions {
  std::string families = "ABCD";
  int max_rank = 3;
  int max_k = 4;
  int jobs = 1;
};

struct Mismatch {
  Weight mu;
  BigInt closed;
  BigInt oracle;
};

struct CellResult {
  StringLabel label;
  std::size_t weights = 0;
  std::vector<Mismatch> mismatches;
  bool dimension_ok = true;
};

/// Every label checked by `verify` for one family up to the given ranges.
inline std::vector<StringLabel> verify_cells(Family family, int max_rank, int max_k) {
  std::vector<StringLabel> cells;
  int const min_rank = family == Family::A ? 1 : 2;
  for (int n = min_rank; n <= max_rank; ++n) {
    LieType const lie(family, n);
    for (int k = 0; k <= max_k; ++k) {
      for (int p = 1; p <= n; ++p) cells.emplace_back(lie, k, p);
      if (family == Family::B || family == Family::D) cells.push_back(StringLabel::spin_plus(lie, k));
      if (family == Family::D) {
        cells.push_back(StringLabel::spin_minus(lie, k));
        cells.emplace_back(lie, k, n, Variant::SplitTop);
        cells.emplace_back(lie, k, n, Variant::SplitBottom);
      }
    }
  }
  return cells;
}

/// Closed formulas against the Freudenthal diagram over the union of both
/// supports, plus the Weyl dimension of the label.
inline CellResult verify_cell(StringLabel const& label) {
  WeightDiagram const oracle = weight_diagram(label);
  WeightDiagram const closed = closed_weight_diagram(label);
  CellResult result{label, 0, {}, true};
  result.weights = oracle.entries.size();
  for (auto const& [w, m] : oracle.entries) {
    BigInt const c = closed.at(w);
    if (c != m) result.mismatches.push_back({w, c, m});
  }
  for (auto const& [w, c] : closed.entries) {
    if (!oracle.entries.count(w)) result.mismatches.push_back({w, c, 0});
  }
  result.dimension_ok = closed.total() == weyl_dimension(label);
  return result;
}

inline int cmd_verify(VerifyOptions const& opts, std::ostream& out, std::ostream& err) {
  std::vector<StringLabel> cells;
  try {
    if (opts.families.empty()) throw Error("--families must name at least one of A, B, C, D");
    for (char c : opts.families) {
      auto cs = verify_cells(parse_family(std::string(1, c)), opts.max_rank, opts.max_k);
      cells.insert(cells.end(), cs.begin(), cs.end());
    }
    if (opts.jobs < 1) throw Error("--jobs must be >= 1");
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::vector<std::optional<CellResult>> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) results[i] = verify_cell(cells[i]);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < opts.jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::size_t total_mismatches = 0;
  for (auto const& r : results) {
    auto const& cell = *r;
    std::size_t const bad = cell.mismatches.size() + (cell.dimension_ok ? 0 : 1);
    total_mismatches += bad;
    out << cell.label.to_string() << ": " << cell.weights << " weights, " << bad << " mismatches\n";
    auto const lambdas = highest_weights(cell.label);
    for (auto const& m : cell.mismatches) {
      out << "  mismatch lambda=(" << lambdas.front().to_string() << ") mu=(" << m.mu.to_string()
          << ") closed=" << m.closed << " oracle=" << m.oracle << '\n';
    }
    if (!cell.dimension_ok) out << "  mismatch: weighted total differs from Weyl dimension\n";
  }
  out << cells.size() << " cells, " << total_mismatches << " mismatches\n";
  return total_mismatches == 0 ? kExitOk : kExitMismatch;
}

struct BenchOptions {
  Family family = Family::C;
  int rank = 4;
  int k = 6;
  int p = 2;
  std::string variant = "string";
  int samples = 100;
  std::uint64_t seed = 42;
  OutputFormat output = OutputFormat::Plain;
};

/// Random weight with |mu| <= k + p (string) or on the spin coset with
/// r(mu) >= 0, respecting the parity that C and D impose.
inline Weight random_weight(StringLabel const& label, std::mt19937_64& rng) {
  LieType const& lie = label.lie();
  int const dim = lie.ambient_dim();
  bool const spin = label.variant() == Variant::SpinPlus || label.variant() == Variant::SpinMinus;
  std::int64_t budget = 0;
  if (lie.family() == Family::A) {
    budget = label.k() + label.p();
  } else if (spin) {
    budget = std::uniform_int_distribution<std::int64_t>(0, label.k())(rng);
  } else {
    budget = std::uniform_int_distribution<std::int64_t>(0, label.k() + label.p())(rng);
    if (lie.family() != Family::B && (label.k() + label.p() - budget) % 2 != 0) --budget;
  }
  // composition of budget into dim parts via sorted cut points
  std::vector<std::int64_t> cuts{0, budget};
  std::uniform_int_distribution<std::int64_t> cut(0, budget);
  for (int i = 0; i + 1 < dim; ++i) cuts.push_back(cut(rng));
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::int64_t> d(static_cast<std::size_t>(dim));
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::int64_t v = cuts[i + 1] - cuts[i];
    d[i] = spin ? 2 * v + 1 : 2 * v;
    if (lie.family() != Family::A && coin(rng)) d[i] = -d[i];
  }
  return Weight::from_doubled(std::move(d));
}

struct Timing {
  double median_us = 0;
  double p95_us = 0;
  double max_us = 0;
};

inline Timing summarize(std::vector<double> us) {
  if (us.empty()) return {};
  std::sort(us.begin(), us.end());
  auto at = [&](double q) { return us[std::min(us.size() - 1, static_cast<std::size_t>(q * (us.size() - 1) + 0.5))]; };
  return {at(0.5), at(0.95), us.back()};
}

inline int cmd_bench(BenchOptions const& opts, std::ostream& out, std::ostream& err) {
  std::optional<StringLabel> label;
  try {
    Query q;
    q.family = opts.family;
    q.rank = opts.rank;
    q.k = opts.k;
    q.p = opts.p;
    q.variant = opts.variant;
    if (q.variant == "split") q.variant = "split+";
    label = make_label(q);
    if (opts.samples < 1) throw Error("--samples must be >= 1");
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::mt19937_64 rng(opts.seed);
  std::vector<Weight> weights;
  for (int s = 0; s < opts.samples; ++s) weights.push_back(random_weight(*label, rng));

  using clock = std::chrono::steady_clock;
  auto micros = [](clock::duration d) { return std::chrono::duration<double, std::micro>(d).count(); };

  std::vector<double> closed_us;
  std::size_t nonzero = 0;
  for (auto const& w : weights) {
    auto const t0 = clock::now();
    BigInt const m = multiplicity(*label, w);
    closed_us.push_back(micros(clock::now() - t0));
    if (m != 0) ++nonzero;
  }

  bool const run_oracle = opts.rank <= 6 && opts.k + opts.p <= 16;
  std::vector<double> oracle_us;
  if (run_oracle) {
    auto const lambdas = highest_weights(*label);
    for (auto const& w : weights) {
      auto const t0 = clock::now();
      BigInt m = 0;
      for (auto const& lambda : lambdas) m += freudenthal(label->lie(), lambda, w);
      oracle_us.push_back(micros(clock::now() - t0));
    }
  }

  Timing const closed = summarize(closed_us);
  Timing const oracle = summarize(oracle_us);
  if (opts.output == OutputFormat::Json) {
    nlohmann::json doc = {{"family", std::string(1, family_char(opts.family))},
                          {"rank", opts.rank},
                          {"k", opts.k},
                          {"p", label->p()},
                          {"variant", opts.variant},
                          {"samples", opts.samples},
                          {"seed", opts.seed},
                          {"nonzero", nonzero},
                          {"closed", {{"median_us", closed.median_us}, {"p95_us", closed.p95_us}, {"max_us", closed.max_us}}}};
    if (run_oracle) {
      doc["oracle"] = {{"median_us", oracle.median_us}, {"p95_us", oracle.p95_us}, {"max_us", oracle.max_us}};
    }
    out << doc.dump() << '\n';
    return kExitOk;
  }
  out << "bench " << label->to_string() << " samples=" << opts.samples << " seed=" << opts.seed
      << " nonzero=" << nonzero << '\n';
  out << "closed median_us=" << closed.median_us << " p95_us=" << closed.p95_us << " max_us=" << closed.max_us
      << '\n';
  if (run_oracle) {
    out << "oracle median_us=" << oracle.median_us << " p95_us=" << oracle.p95_us << " max_us=" << oracle.max_us
        << '\n';
  } else {
    out << "oracle skipped (rank > 6 or k + p > 16)\n";
  }
  return kExitOk;
}

namespace detail {

inline OutputFormat parse_output(std::string const& s) {
  if (s == "plain") return OutputFormat::Plain;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw Error("--output must be plain, json or csv");
}

struct RawQuery {
  std::string family = "C";
  int rank = 2;
  int k = 0;
  std::optional<int> p;
  std::string variant = "string";
  std::string weight;
  std::string output = "plain";
  bool force = false;
};

inline void add_query_options(CLI::App* cmd, RawQuery& raw, bool with_weight) {
  cmd->add_option("--family", raw.family, "A, B, C or D")->required();
  cmd->add_option("--rank", raw.rank, "rank n")->required();
  cmd->add_option("--k", raw.k, "multiple of the first fundamental weight");
  cmd->add_option("--p", raw.p, "fundamental index p");
  cmd->add_option("--variant", raw.variant, "string, spin+, spin-, split, split+, split-");
  if (with_weight) cmd->add_option("--weight", raw.weight, "weight, e.g. 2,-1,0 or 1/2,1/2,-1/2")->required();
  cmd->add_option("--output", raw.output, "plain, json or csv");
}

inline Query to_query(RawQuery const& raw) {
  Query q;
  q.family = parse_family(raw.family);
  q.rank = raw.rank;
  q.k = raw.k;
  q.p = raw.p;
  q.variant = raw.variant;
  if (!raw.weight.empty()) q.weight = Weight::parse(raw.weight);
  q.output = parse_output(raw.output);
  q.force = raw.force;
  return q;
}

}  // namespace detail

inline int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form weight multiplicities for p-fundamental strings of classical Lie algebras"};
  app.require_subcommand(1);

  detail::RawQuery mult_raw, diagram_raw, dim_raw;
  auto* mult = app.add_subcommand("mult", "multiplicity of one weight");
  detail::add_query_options(mult, mult_raw, true);
  auto* diagram = app.add_subcommand("diagram", "every weight with its multiplicity");
  detail::add_query_options(diagram, diagram_raw, false);
  diagram->add_flag("--force", diagram_raw.force, "lift the rank <= 8, k <= 64 guard");
  auto* dim = app.add_subcommand("dim", "Weyl dimension");
  detail::add_query_options(dim, dim_raw, false);

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "closed formulas against the Freudenthal oracle");
  verify->add_option("--families", verify_opts.families, "subset of ABCD");
  verify->add_option("--max-rank", verify_opts.max_rank);
  verify->add_option("--max-k", verify_opts.max_k);
  verify->add_option("--jobs", verify_opts.jobs);

  BenchOptions bench_opts;
  std::string bench_family = "C";
  std::string bench_output = "plain";
  auto* bench = app.add_subcommand("bench", "time closed-form evaluation (and the oracle at small rank)");
  bench->add_option("--family", bench_family);
  bench->add_option("--rank", bench_opts.rank);
  bench->add_option("--k", bench_opts.k);
  bench->add_option("--p", bench_opts.p);
  bench->add_option("--variant", bench_opts.variant);
  bench->add_option("--samples", bench_opts.samples);
  bench->add_option("--seed", bench_opts.seed);
  bench->add_option("--output", bench_output);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*mult) return cmd_mult(detail::to_query(mult_raw), out, err);
    if (*diagram) return cmd_diagram(detail::to_query(diagram_raw), out, err);
    if (*dim) return cmd_dim(detail::to_query(dim_raw), out, err);
    if (*verify) return cmd_verify(verify_opts, out, err);
    if (*bench) {
      bench_opts.family = parse_family(bench_family);
      bench_opts.output = detail::parse_output(bench_output);
      return cmd_bench(bench_opts, out, err);
    }
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fundstring::cli
