#pragma once

#include <functional>

#include "fjq/graph.hpp"
#include "fjq/types.hpp"

namespace fjq {

struct TrajectoryStats {
  int iterations = 0;
  // Max-norm of the last update step.
  double final_change = 0.0;
};

struct FjResult {
  Vector z;
  TrajectoryStats stats;
};

// Called once per sweep with (iteration, max-norm step change).
using TrajectoryObserver = std::function<void(int, double)>;

// Synchronous Friedkin-Johnsen updates from z = s:
//   z_i <- (s_i + sum_{j in N(i)} w_ij z_j) / (1 + d_i)
// until the max-norm step change drops below `tol`. The fixed point is
// (I+L)^{-1} s. Throws ValidationError for tol <= 0 or a length mismatch and
// ConvergenceError (carrying the last iterate) after `max_steps` sweeps.
FjResult fj_iterate(const Graph& g, const Vector& s, double tol, int max_steps,
                    const TrajectoryObserver& observer = {});

}  // namespace fjq
