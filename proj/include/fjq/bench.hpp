#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fjq/exact.hpp"
#include "fjq/graph.hpp"
#include "fjq/opinions.hpp"
#include "fjq/report.hpp"
#include "fjq/solver.hpp"

namespace fjq {

struct BenchmarkRow {
  std::string network;
  std::size_t raw_n = 0;
  std::size_t raw_m = 0;
  // Largest-connected-component sizes.
  std::size_t n = 0;
  std::size_t m = 0;
  Distribution distribution = Distribution::kUniform;
  std::string method;  // "exact" or "approx"
  std::string status;  // "ok", "skipped" or "failed"
  // Time spent loading the file and extracting the component.
  std::optional<double> prep_time_s;
  // Time spent computing the quantities only.
  std::optional<double> wall_time_s;
  std::optional<Quantities> values;
  // |rho - rho~| / rho against the exact row; approx rows only.
  std::optional<Quantities> relative_errors;
  std::string note;

  bool operator==(const BenchmarkRow&) const = default;
};

struct BenchConfig {
  double epsilon = 1e-6;
  std::size_t exact_cutoff = kDefaultDenseGuard;
  std::uint64_t seed = 0;
  DeltaMode delta_mode = DeltaMode::kTheoretical;
  int max_iterations = 10000;
  std::vector<Distribution> distributions = {Distribution::kUniform, Distribution::kExponential,
                                             Distribution::kPowerLaw};
  // Number of (graph, distribution) cells evaluated concurrently.
  unsigned jobs = 1;
};

struct BenchInput {
  std::string name;
  Graph graph;  // already reduced to its largest connected component
  std::size_t raw_n = 0;
  std::size_t raw_m = 0;
  double prep_time_s = 0.0;
};

// For each graph and distribution: one exact row (computed iff
// n <= exact_cutoff, "skipped" otherwise) followed by one approx row.
// Failures are confined to the row that raised them.
std::vector<BenchmarkRow> run_bench(const std::vector<BenchInput>& inputs, const BenchConfig& cfg);

// Loads each edge list, extracts its largest component and runs the bench.
// A file that cannot be loaded yields failed rows for every distribution.
std::vector<BenchmarkRow> run_bench_files(const std::vector<std::filesystem::path>& paths,
                                          const BenchConfig& cfg);

// Human-readable aligned table; missing values print as "---".
void write_bench_table(std::ostream& out, const std::vector<BenchmarkRow>& rows);

// Tab-separated records, one per line, after a '#' header naming the fields:
//   network raw_n raw_m n m distribution method status prep_time_s
//   wall_time_s C_I D P C I_dc err_C_I err_D err_P err_C err_I_dc note
// Reals use the shortest round-trip form; absent values are "---".
void write_bench_records(std::ostream& out, const std::vector<BenchmarkRow>& rows);
std::vector<BenchmarkRow> parse_bench_records(std::istream& in);

}  // namespace fjq
