#pragma once

#include "fjq/graph.hpp"
#include "fjq/report.hpp"
#include "fjq/solver.hpp"
#include "fjq/types.hpp"

namespace fjq {

// Below this ||s_bar|| the opinions are treated as consensus: C_I, D and P
// are exactly zero and the centered solve is skipped.
inline constexpr double kConsensusThreshold = 1e-14;

struct ApproxOptions {
  DeltaMode mode = DeltaMode::kTheoretical;
  int max_iterations = 10000;
  Preconditioner preconditioner = Preconditioner::kJacobi;
  // Run the two solves on separate threads. Each solve is sequential, so the
  // result is bitwise identical either way.
  bool concurrent_solves = true;
};

struct ApproxReport {
  Quantities estimates;
  SolverConfig config;
  SolveReport s_solve;
  // Zero iterations when the consensus short-circuit applied.
  SolveReport centered_solve;
  bool consensus_shortcut = false;
  double s_bar_norm = 0.0;
  // ||L q||^2; equals C_I in exact arithmetic. Exposed for cross-checks.
  double internal_conflict_from_centered = 0.0;
  double wall_time_s = 0.0;
  Vector z_tilde;
  Vector q;

  QuantityReport to_report(const Graph& g) const;
};

// eps w_min ||s_bar|| / (3 w_max n^3 (n w_max + 1) sqrt(n)).
// Zero when ||s_bar|| is zero. Throws ValidationError unless 0 < eps < 1/2.
double compute_delta(const Graph& g, double s_bar_norm, double epsilon);

// Estimates all five quantities from two solves against I+L:
//   z~ = Solve(s), q = Solve(s - mean(s)), C_I = ||L z~||^2,
//   D = ||W^{1/2} B q||^2, P = ||q||^2, C = ||z~||^2, I_dc = D + C.
// Requires a connected graph and s in [0,1]^n (ValidationError otherwise);
// solver failures surface as ConvergenceError.
ApproxReport approxim(const Graph& g, const Vector& s, double epsilon,
                      const ApproxOptions& options = {});

}  // namespace fjq
