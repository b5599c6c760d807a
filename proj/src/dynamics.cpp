#include "fjq/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fjq {

FjResult fj_iterate(const Graph& g, const Vector& s, double tol, int max_steps,
                    const TrajectoryObserver& observer) {
  const std::size_t n = g.num_nodes();
  if (static_cast<std::size_t>(s.size()) != n) {
    throw ValidationError("fj_iterate: opinion vector has length " + std::to_string(s.size()) +
                          ", expected " + std::to_string(n));
  }
  if (!(tol > 0.0)) throw ValidationError("fj_iterate: tolerance must be positive");
  if (max_steps <= 0) throw ValidationError("fj_iterate: max_steps must be positive");

  const auto& off = g.offsets();
  const auto& adj = g.adjacency();
  const auto& w = g.adjacency_weights();
  const Vector& d = g.degrees();

  FjResult out;
  Vector current = s;
  Vector next(static_cast<Eigen::Index>(n));
  for (int step = 1; step <= max_steps; ++step) {
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      double acc = s[ii];
      for (std::size_t k = off[i]; k < off[i + 1]; ++k) acc += w[k] * current[adj[k]];
      next[ii] = acc / (1.0 + d[ii]);
      change = std::max(change, std::abs(next[ii] - current[ii]));
    }
    current.swap(next);
    out.stats.iterations = step;
    out.stats.final_change = change;
    if (observer) observer(step, change);
    if (change < tol) {
      out.z = std::move(current);
      return out;
    }
  }
  throw ConvergenceError("fj_iterate: step change " + std::to_string(out.stats.final_change) +
                             " still above tolerance after " + std::to_string(max_steps) + " sweeps",
                         current, max_steps, out.stats.final_change);
}

}  // namespace fjq
