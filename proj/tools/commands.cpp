#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>

#include "fjq/approx.hpp"
#include "fjq/dynamics.hpp"
#include "fjq/exact.hpp"
#include "fjq/generators.hpp"
#include "fjq/text_util.hpp"

namespace fjq::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw Error("cannot open " + path + " for writing");
  return file;
}

void report_cleanup(const LoadedGraph& loaded, const std::string& path, std::ostream& err) {
  if (loaded.stats.self_loops > 0) {
    err << "warning: " << path << ": dropped " << loaded.stats.self_loops << " self-loop(s)\n";
  }
  if (loaded.stats.duplicates > 0) {
    err << "warning: " << path << ": dropped " << loaded.stats.duplicates
        << " duplicate edge(s), keeping the first weight\n";
  }
}

// Opinions indexed either by raw compact id (length n) or by component id
// (length n').
Vector opinions_for_component(const Vector& raw, const LoadedGraph& loaded,
                              const ComponentExtraction& lcc) {
  const auto n_raw = static_cast<Eigen::Index>(loaded.graph.num_nodes());
  const auto n_lcc = static_cast<Eigen::Index>(lcc.graph.num_nodes());
  if (raw.size() == n_lcc) return raw;
  if (raw.size() == n_raw) {
    Vector s(n_lcc);
    for (Eigen::Index i = 0; i < n_lcc; ++i) s[i] = raw[lcc.new_to_old[static_cast<std::size_t>(i)]];
    return s;
  }
  throw ValidationError("opinion file has " + std::to_string(raw.size()) +
                        " values; expected " + std::to_string(n_lcc) +
                        " (largest component) or " + std::to_string(n_raw) + " (all nodes)");
}

void emit_report(const QuantityReport& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    write_json(out, report);
  } else if (format == "kv") {
    write_key_value(out, report);
  } else {
    throw ValidationError("unknown format \"" + format + "\" (expected kv or json)");
  }
}

void emit_vector(std::ostream& err, const char* name, const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    err << "# " << name << '[' << i << "]=" << format_double(v[i]) << '\n';
  }
}

}  // namespace

int cmd_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  LoadedGraph loaded = load_edge_list(opts.graph_path, opts.index_base);
  report_cleanup(loaded, opts.graph_path, err);
  ComponentExtraction lcc = largest_connected_component(loaded.graph);
  const Graph& g = lcc.graph;
  if (g.num_nodes() < loaded.graph.num_nodes()) {
    err << "note: using largest connected component, n'=" << g.num_nodes() << " of "
        << loaded.graph.num_nodes() << " nodes\n";
  }

  Vector s;
  if (opts.opinions_path) {
    s = opinions_for_component(read_opinions(*opts.opinions_path), loaded, lcc);
  } else {
    s = generate_opinions(g.num_nodes(), opts.distribution);
  }

  QuantityReport report;
  if (opts.method == "exact") {
    Vector z;
    report = exact_quantities(g, s, opts.exact_cutoff, &z);
    if (opts.debug) emit_vector(err, "z", z);
  } else if (opts.method == "approx") {
    ApproxOptions a;
    a.mode = opts.delta_mode;
    a.max_iterations = opts.max_iterations;
    a.preconditioner = opts.preconditioner;
    ApproxReport r = approxim(g, s, opts.epsilon, a);
    report = r.to_report(g);
    if (r.config.clamped) {
      err << "note: theoretical delta " << format_double(r.config.delta_theoretical)
          << " clamped to " << format_double(r.config.delta_effective) << '\n';
    }
    if (opts.debug) {
      err << "# s_solve iterations=" << r.s_solve.iterations
          << " certified_delta=" << format_double(r.s_solve.certified_delta) << '\n';
      err << "# centered_solve iterations=" << r.centered_solve.iterations
          << " certified_delta=" << format_double(r.centered_solve.certified_delta) << '\n';
      err << "# internal_conflict_from_centered=" << format_double(r.internal_conflict_from_centered)
          << '\n';
      emit_vector(err, "z", r.z_tilde);
    }
  } else if (opts.method == "fj") {
    validate_opinions(g, s);
    std::optional<std::ofstream> trajectory;
    if (opts.trajectory_path) trajectory = open_output(*opts.trajectory_path);
    TrajectoryObserver observer;
    if (trajectory) {
      observer = [&trajectory](int it, double change) {
        *trajectory << it << ' ' << format_double(change) << '\n';
      };
    }
    const auto t0 = Clock::now();
    FjResult fj = fj_iterate(g, s, opts.fj_tolerance, opts.fj_max_steps, observer);
    report = quantities_from_equilibrium(g, s, fj.z);
    report.method = "fj";
    report.solver_iterations = fj.stats.iterations;
    report.wall_time_s = seconds_since(t0);
    if (opts.debug) emit_vector(err, "z", fj.z);
  } else {
    throw ValidationError("unknown method \"" + opts.method + "\" (expected exact, approx or fj)");
  }

  emit_report(report, opts.format, out);
  if (opts.output_path) {
    std::ofstream file = open_output(*opts.output_path);
    emit_report(report, opts.format, file);
  }
  err << "# timing: compute_s=" << format_double(report.wall_time_s)
      << " total_s=" << format_double(seconds_since(start)) << '\n';
  return kOk;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  std::vector<std::filesystem::path> paths(opts.graph_paths.begin(), opts.graph_paths.end());
  std::vector<BenchmarkRow> rows = run_bench_files(paths, opts.config);
  if (opts.format == "records") {
    write_bench_records(out, rows);
  } else if (opts.format == "table") {
    write_bench_table(out, rows);
  } else {
    throw ValidationError("unknown format \"" + opts.format + "\" (expected table or records)");
  }
  if (opts.output_path) {
    std::ofstream file = open_output(*opts.output_path);
    write_bench_records(file, rows);
  }
  const auto failed = std::count_if(rows.begin(), rows.end(),
                                    [](const BenchmarkRow& r) { return r.status == "failed"; });
  err << "# bench: " << rows.size() << " rows, " << failed
      << " failed, total_s=" << format_double(seconds_since(start)) << '\n';
  return failed == 0 ? kOk : kFailure;
}

int cmd_gen_opinions(const GenOpinionsOptions& opts, std::ostream& out, std::ostream& /*err*/) {
  const Vector s = generate_opinions(opts.n, opts.distribution);
  const std::string header = "n=" + std::to_string(opts.n) + " " + opts.distribution.describe();
  if (opts.output_path) {
    std::ofstream file = open_output(*opts.output_path);
    write_opinions(file, s, header);
  } else {
    write_opinions(out, s, header);
  }
  return kOk;
}

int cmd_lcc(const LccOptions& opts, std::ostream& out, std::ostream& err) {
  LoadedGraph loaded = load_edge_list(opts.graph_path, opts.index_base);
  report_cleanup(loaded, opts.graph_path, err);
  ComponentExtraction lcc = largest_connected_component(loaded.graph);
  out << "n=" << loaded.graph.num_nodes() << " m=" << loaded.graph.num_edges()
      << " n'=" << lcc.graph.num_nodes() << " m'=" << lcc.graph.num_edges() << '\n';
  if (opts.output_path) {
    std::ofstream file = open_output(*opts.output_path);
    write_edge_list(file, lcc.graph);
  }
  if (opts.map_path) {
    std::ofstream file = open_output(*opts.map_path);
    write_relabel_map(file, lcc, loaded.original_ids);
  }
  return kOk;
}

int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& /*err*/) {
  struct Case {
    std::string name;
    Graph graph;
  };
  std::vector<Case> cases;
  if (opts.graph_path) cases.push_back({*opts.graph_path, load_edge_list(*opts.graph_path).graph});
  std::mt19937_64 rng(opts.seed);
  for (std::size_t k = 0; k < opts.random_graphs; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(opts.max_n, 1))(rng);
    const std::size_t max_m = n * (n - 1) / 2;
    const std::size_t m = n <= 1 ? 0 : std::uniform_int_distribution<std::size_t>(n - 1, max_m)(rng);
    gen::WeightRange w = (k % 2 == 0) ? gen::WeightRange{} : gen::WeightRange{0.1, 5.0};
    cases.push_back({"random#" + std::to_string(k), gen::random_connected(n, m, rng(), w)});
  }

  double worst = 0.0;
  for (const Case& c : cases) {
    const ForestMatrix fm = forest_matrix_dense(c.graph);
    const ForestCensus census = enumerate_rooted_forests(c.graph);
    double dev = 0.0;
    for (std::size_t i = 0; i < census.n; ++i) {
      for (std::size_t j = 0; j < census.n; ++j) {
        const double dense = fm.omega(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        dev = std::max(dev, relative_error(census.omega(i, j), dense));
      }
    }
    worst = std::max(worst, dev);
    out << c.name << " n=" << c.graph.num_nodes() << " m=" << c.graph.num_edges()
        << " forests=" << format_double(census.total()) << " max_rel_dev=" << format_double(dev)
        << (dev <= opts.tolerance ? " ok" : " MISMATCH") << '\n';
  }
  out << "cases=" << cases.size() << " worst_rel_dev=" << format_double(worst) << '\n';
  return worst <= opts.tolerance ? kOk : kFailure;
}

}  // namespace fjq::cli
