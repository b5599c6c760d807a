#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fjq/bench.hpp"
#include "fjq/graph.hpp"
#include "fjq/opinions.hpp"
#include "fjq/solver.hpp"

namespace fjq::cli {

// Process exit codes. Library errors map through Error::exit_code().
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,      // usage errors, oracle mismatches, anything else
  kParse = 2,        // malformed input files
  kValidation = 3,   // bad parameters or inputs
  kConvergence = 4,  // solver or dynamics did not converge
  kGuard = 5,        // size guard refused the request
};

struct ComputeOptions {
  std::string graph_path;
  IndexBase index_base = IndexBase::kAuto;
  std::optional<std::string> opinions_path;
  DistributionSpec distribution;
  std::string method = "approx";  // exact | approx | fj
  double epsilon = 1e-6;
  DeltaMode delta_mode = DeltaMode::kTheoretical;
  int max_iterations = 10000;
  Preconditioner preconditioner = Preconditioner::kJacobi;
  std::size_t exact_cutoff = kDefaultDenseGuard;
  double fj_tolerance = 1e-12;
  int fj_max_steps = 1000000;
  std::optional<std::string> trajectory_path;
  std::string format = "kv";  // kv | json
  std::optional<std::string> output_path;
  bool debug = false;
};

struct BenchOptions {
  std::vector<std::string> graph_paths;
  BenchConfig config;
  std::string format = "table";  // table | records
  std::optional<std::string> output_path;
};

struct GenOpinionsOptions {
  std::size_t n = 0;
  DistributionSpec distribution;
  std::optional<std::string> output_path;
};

struct LccOptions {
  std::string graph_path;
  IndexBase index_base = IndexBase::kAuto;
  std::optional<std::string> output_path;
  std::optional<std::string> map_path;
};

struct OracleOptions {
  std::optional<std::string> graph_path;
  std::size_t random_graphs = 0;
  std::size_t max_n = 8;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

// Each command writes results to `out`, diagnostics to `err`, and returns
// an exit code. Library errors propagate; run_guarded() converts them.
int cmd_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);
int cmd_gen_opinions(const GenOpinionsOptions& opts, std::ostream& out, std::ostream& err);
int cmd_lcc(const LccOptions& opts, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err);

template <typename Fn>
int run_guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace fjq::cli
