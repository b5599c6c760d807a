#include "fjq/approx.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <string>

#include "fjq/exact.hpp"

namespace fjq {

double compute_delta(const Graph& g, double s_bar_norm, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw ValidationError("epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));
  }
  if (s_bar_norm == 0.0) return 0.0;
  const double n = static_cast<double>(g.num_nodes());
  const double w_max = g.max_weight();
  // Edgeless graphs have no weight ratio; treat it as 1.
  const double ratio = w_max > 0.0 ? g.min_weight() / w_max : 1.0;
  const double scale = w_max > 0.0 ? w_max : 1.0;
  return epsilon * ratio * s_bar_norm / (3.0 * n * n * n * (n * scale + 1.0) * std::sqrt(n));
}

QuantityReport ApproxReport::to_report(const Graph& g) const {
  QuantityReport r;
  r.method = "approx";
  r.n = g.num_nodes();
  r.m = g.num_edges();
  r.epsilon = config.epsilon;
  r.values = estimates;
  r.solver_iterations = s_solve.iterations + centered_solve.iterations;
  r.wall_time_s = wall_time_s;
  r.delta_theoretical = config.delta_theoretical;
  r.delta_effective = config.delta_effective;
  r.delta_mode = std::string(to_string(config.mode));
  r.delta_clamped = config.clamped;
  return r;
}

ApproxReport approxim(const Graph& g, const Vector& s, double epsilon,
                      const ApproxOptions& options) {
  validate_opinions(g, s);
  if (!is_connected(g)) {
    throw ValidationError("graph is disconnected; extract the largest connected component first");
  }
  const auto start = std::chrono::steady_clock::now();

  ApproxReport rep;
  const Vector s_bar = s.array() - s.mean();
  rep.s_bar_norm = s_bar.norm();
  rep.consensus_shortcut = rep.s_bar_norm < kConsensusThreshold;
  const double delta = rep.consensus_shortcut ? 0.0 : compute_delta(g, rep.s_bar_norm, epsilon);
  rep.config = resolve_solver_config(epsilon, delta, options.mode, options.max_iterations,
                                     options.preconditioner);

  SolveOptions solve_opts;
  solve_opts.max_iterations = options.max_iterations;
  solve_opts.preconditioner = options.preconditioner;
  const double delta_eff = rep.config.delta_effective;

  SolveResult z_solve;
  SolveResult q_solve;
  if (rep.consensus_shortcut) {
    z_solve = solve_shifted_laplacian(g, s, delta_eff, solve_opts);
    q_solve.y = Vector::Zero(s.size());
  } else if (options.concurrent_solves) {
    auto pending = std::async(std::launch::async, [&] {
      return solve_shifted_laplacian(g, s_bar, delta_eff, solve_opts);
    });
    z_solve = solve_shifted_laplacian(g, s, delta_eff, solve_opts);
    q_solve = pending.get();
  } else {
    z_solve = solve_shifted_laplacian(g, s, delta_eff, solve_opts);
    q_solve = solve_shifted_laplacian(g, s_bar, delta_eff, solve_opts);
  }
  rep.s_solve = z_solve.report;
  rep.centered_solve = q_solve.report;
  rep.z_tilde = std::move(z_solve.y);
  rep.q = std::move(q_solve.y);

  Quantities& est = rep.estimates;
  if (rep.consensus_shortcut) {
    est.internal_conflict = 0.0;
    est.disagreement = 0.0;
    est.polarization = 0.0;
  } else {
    est.internal_conflict = laplacian_apply(g, rep.z_tilde).squaredNorm();
    est.disagreement = incidence_weighted_apply(g, rep.q).squaredNorm();
    est.polarization = rep.q.squaredNorm();
    rep.internal_conflict_from_centered = laplacian_apply(g, rep.q).squaredNorm();
  }
  est.controversy = rep.z_tilde.squaredNorm();
  est.dc_index = est.disagreement + est.controversy;

  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace fjq
