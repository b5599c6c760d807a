#include "fjq/bench.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "fjq/approx.hpp"
#include "fjq/text_util.hpp"

namespace fjq {

namespace {

constexpr std::string_view kMissing = "---";
constexpr std::size_t kFieldCount = 21;

std::pair<BenchmarkRow, BenchmarkRow> run_cell(const BenchInput& in, Distribution dist,
                                               const BenchConfig& cfg) {
  BenchmarkRow base;
  base.network = in.name;
  base.raw_n = in.raw_n;
  base.raw_m = in.raw_m;
  base.n = in.graph.num_nodes();
  base.m = in.graph.num_edges();
  base.distribution = dist;
  base.prep_time_s = in.prep_time_s;

  BenchmarkRow exact = base;
  exact.method = "exact";
  BenchmarkRow approx = base;
  approx.method = "approx";

  Vector s;
  try {
    DistributionSpec spec;
    spec.kind = dist;
    spec.seed = cfg.seed;
    s = generate_opinions(in.graph.num_nodes(), spec);
  } catch (const std::exception& e) {
    exact.status = approx.status = "failed";
    exact.note = approx.note = e.what();
    return {exact, approx};
  }

  if (base.n <= cfg.exact_cutoff) {
    try {
      QuantityReport r = exact_quantities(in.graph, s, cfg.exact_cutoff);
      exact.status = "ok";
      exact.values = r.values;
      exact.wall_time_s = r.wall_time_s;
    } catch (const std::exception& e) {
      exact.status = "failed";
      exact.note = e.what();
    }
  } else {
    exact.status = "skipped";
    exact.note = "n exceeds exact cutoff " + std::to_string(cfg.exact_cutoff);
  }

  try {
    ApproxOptions opts;
    opts.mode = cfg.delta_mode;
    opts.max_iterations = cfg.max_iterations;
    ApproxReport r = approxim(in.graph, s, cfg.epsilon, opts);
    approx.status = "ok";
    approx.values = r.estimates;
    approx.wall_time_s = r.wall_time_s;
    if (exact.values) {
      Quantities err;
      for (Quantity q : kAllQuantities) {
        err.get(q) = relative_error(exact.values->get(q), r.estimates.get(q));
      }
      approx.relative_errors = err;
    }
  } catch (const std::exception& e) {
    approx.status = "failed";
    approx.note = e.what();
  }
  return {exact, approx};
}

std::string sanitize(std::string text) {
  std::replace_if(text.begin(), text.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return text;
}

std::string opt_text(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string(kMissing);
}

std::optional<double> parse_opt(std::string_view field, std::size_t line_no) {
  if (field == kMissing) return std::nullopt;
  double v = 0.0;
  if (!detail::parse_double(field, v)) {
    throw ParseError("bench record line " + std::to_string(line_no) + ": bad number \"" +
                     std::string(field) + "\"");
  }
  return v;
}

std::size_t parse_size(std::string_view field, std::size_t line_no) {
  std::uint64_t v = 0;
  if (!detail::parse_uint(field, v)) {
    throw ParseError("bench record line " + std::to_string(line_no) + ": bad count \"" +
                     std::string(field) + "\"");
  }
  return static_cast<std::size_t>(v);
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

}  // namespace

std::vector<BenchmarkRow> run_bench(const std::vector<BenchInput>& inputs, const BenchConfig& cfg) {
  struct Cell {
    const BenchInput* input;
    Distribution dist;
  };
  std::vector<Cell> cells;
  for (const BenchInput& in : inputs) {
    for (Distribution d : cfg.distributions) cells.push_back({&in, d});
  }

  std::vector<std::pair<BenchmarkRow, BenchmarkRow>> results(cells.size());
  const std::size_t jobs = std::max<unsigned>(cfg.jobs, 1);
  for (std::size_t begin = 0; begin < cells.size(); begin += jobs) {
    const std::size_t end = std::min(cells.size(), begin + jobs);
    if (jobs == 1) {
      results[begin] = run_cell(*cells[begin].input, cells[begin].dist, cfg);
      continue;
    }
    std::vector<std::future<std::pair<BenchmarkRow, BenchmarkRow>>> pending;
    for (std::size_t i = begin; i < end; ++i) {
      pending.push_back(std::async(std::launch::async, run_cell, std::cref(*cells[i].input),
                                   cells[i].dist, std::cref(cfg)));
    }
    for (std::size_t i = begin; i < end; ++i) results[i] = pending[i - begin].get();
  }

  std::vector<BenchmarkRow> rows;
  rows.reserve(2 * results.size());
  for (auto& [exact, approx] : results) {
    rows.push_back(std::move(exact));
    rows.push_back(std::move(approx));
  }
  return rows;
}

std::vector<BenchmarkRow> run_bench_files(const std::vector<std::filesystem::path>& paths,
                                          const BenchConfig& cfg) {
  std::vector<BenchInput> inputs;
  std::vector<BenchmarkRow> failed;
  for (const auto& path : paths) {
    const auto start = std::chrono::steady_clock::now();
    try {
      LoadedGraph loaded = load_edge_list(path);
      ComponentExtraction lcc = largest_connected_component(loaded.graph);
      BenchInput in;
      in.name = path.stem().string();
      in.raw_n = loaded.graph.num_nodes();
      in.raw_m = loaded.graph.num_edges();
      in.graph = std::move(lcc.graph);
      in.prep_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      inputs.push_back(std::move(in));
    } catch (const std::exception& e) {
      for (Distribution d : cfg.distributions) {
        for (const char* method : {"exact", "approx"}) {
          BenchmarkRow row;
          row.network = path.stem().string();
          row.distribution = d;
          row.method = method;
          row.status = "failed";
          row.note = e.what();
          failed.push_back(std::move(row));
        }
      }
    }
  }
  std::vector<BenchmarkRow> rows = run_bench(inputs, cfg);
  rows.insert(rows.end(), failed.begin(), failed.end());
  return rows;
}

void write_bench_table(std::ostream& out, const std::vector<BenchmarkRow>& rows) {
  auto sci = [](const std::optional<double>& v, int precision) {
    if (!v) return std::string(kMissing);
    std::ostringstream s;
    s << std::setprecision(precision) << std::scientific << *v;
    return s.str();
  };
  out << std::left << std::setw(18) << "network" << std::right << std::setw(10) << "n'"
      << std::setw(11) << "m'" << "  " << std::left << std::setw(13) << "distribution"
      << std::setw(7) << "method" << std::right << std::setw(10) << "time(s)";
  for (Quantity q : kAllQuantities) out << std::setw(14) << short_name(q);
  for (Quantity q : kAllQuantities) out << std::setw(12) << ("err_" + std::string(short_name(q)));
  out << '\n';
  for (const BenchmarkRow& r : rows) {
    out << std::left << std::setw(18) << r.network << std::right << std::setw(10) << r.n
        << std::setw(11) << r.m << "  " << std::left << std::setw(13) << to_string(r.distribution)
        << std::setw(7) << r.method << std::right << std::setw(10);
    if (r.wall_time_s) {
      std::ostringstream t;
      t << std::fixed << std::setprecision(3) << *r.wall_time_s;
      out << t.str();
    } else {
      out << kMissing;
    }
    for (Quantity q : kAllQuantities) {
      out << std::setw(14) << sci(r.values ? std::optional(r.values->get(q)) : std::nullopt, 6);
    }
    for (Quantity q : kAllQuantities) {
      out << std::setw(12)
          << sci(r.relative_errors ? std::optional(r.relative_errors->get(q)) : std::nullopt, 2);
    }
    if (r.status == "failed") out << "  FAILED: " << sanitize(r.note);
    out << '\n';
  }
}

void write_bench_records(std::ostream& out, const std::vector<BenchmarkRow>& rows) {
  out << "# network\traw_n\traw_m\tn\tm\tdistribution\tmethod\tstatus\tprep_time_s\twall_time_s";
  for (Quantity q : kAllQuantities) out << '\t' << short_name(q);
  for (Quantity q : kAllQuantities) out << "\terr_" << short_name(q);
  out << "\tnote\n";
  for (const BenchmarkRow& r : rows) {
    out << sanitize(r.network) << '\t' << r.raw_n << '\t' << r.raw_m << '\t' << r.n << '\t' << r.m
        << '\t' << to_string(r.distribution) << '\t' << r.method << '\t' << r.status << '\t'
        << opt_text(r.prep_time_s) << '\t' << opt_text(r.wall_time_s);
    for (Quantity q : kAllQuantities) {
      out << '\t' << opt_text(r.values ? std::optional(r.values->get(q)) : std::nullopt);
    }
    for (Quantity q : kAllQuantities) {
      out << '\t' << opt_text(r.relative_errors ? std::optional(r.relative_errors->get(q)) : std::nullopt);
    }
    out << '\t' << sanitize(r.note) << '\n';
  }
}

std::vector<BenchmarkRow> parse_bench_records(std::istream& in) {
  std::vector<BenchmarkRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto f = split_tabs(line);
    if (f.size() != kFieldCount) {
      throw ParseError("bench record line " + std::to_string(line_no) + ": expected " +
                       std::to_string(kFieldCount) + " fields, got " + std::to_string(f.size()));
    }
    BenchmarkRow r;
    r.network = std::string(f[0]);
    r.raw_n = parse_size(f[1], line_no);
    r.raw_m = parse_size(f[2], line_no);
    r.n = parse_size(f[3], line_no);
    r.m = parse_size(f[4], line_no);
    try {
      r.distribution = parse_distribution(f[5]);
    } catch (const ValidationError& e) {
      throw ParseError("bench record line " + std::to_string(line_no) + ": " + e.what());
    }
    r.method = std::string(f[6]);
    r.status = std::string(f[7]);
    r.prep_time_s = parse_opt(f[8], line_no);
    r.wall_time_s = parse_opt(f[9], line_no);
    auto read_block = [&](std::size_t first) -> std::optional<Quantities> {
      Quantities qs;
      bool any = false;
      for (std::size_t k = 0; k < kAllQuantities.size(); ++k) {
        auto v = parse_opt(f[first + k], line_no);
        if (v) {
          qs.get(kAllQuantities[k]) = *v;
          any = true;
        }
      }
      return any ? std::optional(qs) : std::nullopt;
    };
    r.values = read_block(10);
    r.relative_errors = read_block(15);
    r.note = std::string(f[20]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace fjq
