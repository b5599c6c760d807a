#include "fjq/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace fjq {

std::string_view to_string(DeltaMode mode) {
  return mode == DeltaMode::kPractical ? "practical-tolerance" : "theoretical-delta";
}

DeltaMode parse_delta_mode(std::string_view text) {
  if (text == "theoretical-delta" || text == "theoretical") return DeltaMode::kTheoretical;
  if (text == "practical-tolerance" || text == "practical") return DeltaMode::kPractical;
  throw ValidationError("unknown delta mode \"" + std::string(text) +
                        "\" (expected theoretical-delta or practical-tolerance)");
}

SolverConfig resolve_solver_config(double epsilon, double delta_theoretical, DeltaMode mode,
                                   int max_iterations, Preconditioner preconditioner) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw ValidationError("epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));
  }
  if (!(delta_theoretical >= 0.0)) throw ValidationError("theoretical delta must be non-negative");
  if (max_iterations <= 0) throw ValidationError("max_iterations must be positive");

  SolverConfig cfg;
  cfg.epsilon = epsilon;
  cfg.delta_theoretical = delta_theoretical;
  cfg.max_iterations = max_iterations;
  cfg.requested_mode = mode;
  cfg.preconditioner = preconditioner;
  if (mode == DeltaMode::kTheoretical && delta_theoretical >= kTheoreticalFloor) {
    cfg.mode = DeltaMode::kTheoretical;
    cfg.delta_effective = delta_theoretical;
  } else {
    cfg.mode = DeltaMode::kPractical;
    cfg.clamped = delta_theoretical < kPracticalFloor;
    cfg.delta_effective = std::max(delta_theoretical, kPracticalFloor);
  }
  return cfg;
}

double map_delta_to_stopping_rule(const Graph& g, double delta, const Vector& /*x*/) {
  const double n = static_cast<double>(g.num_nodes());
  return delta / std::sqrt(1.0 + n * g.max_weight());
}

namespace {

// IC(0) factor of I+L on the lower-triangular sparsity pattern of the graph.
// I+L is a diagonally dominant M-matrix, so the factorization cannot break
// down in exact arithmetic.
class IncompleteCholesky {
 public:
  explicit IncompleteCholesky(const Graph& g) {
    const std::size_t n = g.num_nodes();
    offsets_.assign(n + 1, 0);
    diag_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto nb = g.neighbors(static_cast<NodeId>(i));
      auto lower = std::lower_bound(nb.begin(), nb.end(), static_cast<NodeId>(i)) - nb.begin();
      offsets_[i + 1] = offsets_[i] + static_cast<std::size_t>(lower);
    }
    cols_.resize(offsets_[n]);
    vals_.resize(offsets_[n]);

    for (std::size_t i = 0; i < n; ++i) {
      const auto nb = g.neighbors(static_cast<NodeId>(i));
      const auto wt = g.neighbor_weights(static_cast<NodeId>(i));
      const std::size_t row = offsets_[i];
      const std::size_t len = offsets_[i + 1] - row;
      double diag = 1.0 + g.degrees()[static_cast<Eigen::Index>(i)];
      for (std::size_t a = 0; a < len; ++a) {
        const NodeId k = nb[a];
        cols_[row + a] = k;
        // Dot product of the computed prefix of row i with row k, both
        // restricted to columns < k.
        double s = -wt[a];
        std::size_t p = row, q = offsets_[k];
        const std::size_t p_end = row + a, q_end = offsets_[k + 1];
        while (p < p_end && q < q_end) {
          if (cols_[p] == cols_[q]) {
            s -= vals_[p++] * vals_[q++];
          } else if (cols_[p] < cols_[q]) {
            ++p;
          } else {
            ++q;
          }
        }
        const double l = s / diag_[k];
        vals_[row + a] = l;
        diag -= l * l;
      }
      if (!(diag > 0.0)) throw Error("incomplete Cholesky breakdown at row " + std::to_string(i));
      diag_[i] = std::sqrt(diag);
    }
  }

  // out = (L L^T)^{-1} r
  void apply(const Vector& r, Vector& out) const {
    const std::size_t n = diag_.size();
    out = r;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = out[static_cast<Eigen::Index>(i)];
      for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) acc -= vals_[k] * out[cols_[k]];
      out[static_cast<Eigen::Index>(i)] = acc / diag_[i];
    }
    for (std::size_t i = n; i-- > 0;) {
      const double v = out[static_cast<Eigen::Index>(i)] / diag_[i];
      out[static_cast<Eigen::Index>(i)] = v;
      for (std::size_t k = offsets_[i]; k < offsets_[i + 1]; ++k) out[cols_[k]] -= vals_[k] * v;
    }
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> cols_;
  std::vector<double> vals_;
  std::vector<double> diag_;
};

struct Certificate {
  double residual = 0.0;
  double bound = std::numeric_limits<double>::infinity();
};

}  // namespace

SolveResult solve_shifted_laplacian(const Graph& g, const Vector& x, double delta,
                                    const SolveOptions& options) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  if (x.size() != n) {
    throw ValidationError("solve_shifted_laplacian: right-hand side has length " +
                          std::to_string(x.size()) + ", expected " + std::to_string(n));
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw ValidationError("solve_shifted_laplacian: delta must be positive and finite");
  }
  if (!x.allFinite()) throw ValidationError("solve_shifted_laplacian: right-hand side is not finite");
  if (options.max_iterations <= 0) throw ValidationError("max_iterations must be positive");

  SolveResult result;
  SolveReport& rep = result.report;
  rep.requested_delta = delta;
  rep.residual_threshold = map_delta_to_stopping_rule(g, delta, x);
  result.y = Vector::Zero(n);

  const double x_norm = x.norm();
  if (x_norm == 0.0) {
    rep.certified_delta = 0.0;
    return result;
  }
  const double spectral_factor = std::sqrt(1.0 + static_cast<double>(n) * g.max_weight());

  // Bound for iterate y given a residual r of that iterate.
  auto certify = [&](const Vector& y, const Vector& r) {
    Certificate c;
    c.residual = r.norm();
    const double a_priori = c.residual / x_norm * spectral_factor;
    double a_posteriori = std::numeric_limits<double>::infinity();
    const double yty = y.dot(x) - y.dot(r);
    if (yty > 0.0) {
      const double y_t = std::sqrt(yty);
      if (y_t > c.residual) a_posteriori = c.residual / (y_t - c.residual);
    }
    c.bound = std::min(a_priori, a_posteriori);
    return c;
  };

  std::optional<IncompleteCholesky> ic;
  if (options.preconditioner == Preconditioner::kIncompleteCholesky) ic.emplace(g);
  const Vector inv_diag = (g.degrees().array() + 1.0).inverse().matrix();
  auto precondition = [&](const Vector& r, Vector& out) {
    if (ic) {
      ic->apply(r, out);
    } else {
      out = inv_diag.cwiseProduct(r);
    }
  };

  Vector& y = result.y;
  Vector r = x;
  Vector z, p, tp;
  precondition(r, z);
  p = z;
  double rz = r.dot(z);

  std::vector<double> best_history;
  best_history.reserve(static_cast<std::size_t>(std::min(options.max_iterations, 1 << 16)) + 1);
  double best = x_norm;
  best_history.push_back(best);

  Certificate last;
  for (int k = 1; k <= options.max_iterations; ++k) {
    shifted_laplacian_apply(g, p, tp);
    const double alpha = rz / p.dot(tp);
    y.noalias() += alpha * p;
    r.noalias() -= alpha * tp;
    rep.iterations = k;

    const Certificate recurrence = certify(y, r);
    if (recurrence.bound <= delta) {
      // Recompute the residual from scratch; it is the one that certifies.
      // The recurrence residual is left untouched so the iterates do not
      // depend on delta, which keeps the cost monotone in delta.
      Vector true_r;
      shifted_laplacian_apply(g, y, true_r);
      true_r = x - true_r;
      last = certify(y, true_r);
      ++rep.true_residual_checks;
      if (last.bound <= delta) {
        rep.final_residual = last.residual;
        rep.relative_residual = last.residual / x_norm;
        rep.certified_delta = last.bound;
        return result;
      }
    }

    best = std::min(best, recurrence.residual);
    best_history.push_back(best);
    if (k >= options.stagnation_window) {
      const double before = best_history[static_cast<std::size_t>(k - options.stagnation_window)];
      if (before - best < options.stagnation_improvement * before) {
        Vector true_r;
        shifted_laplacian_apply(g, y, true_r);
        true_r = x - true_r;
        last = certify(y, true_r);
        throw ConvergenceError("solve_shifted_laplacian: residual stagnated at " +
                                   std::to_string(last.residual / x_norm) + " (relative) after " +
                                   std::to_string(k) + " iterations; achieved bound " +
                                   std::to_string(last.bound) + " > delta " + std::to_string(delta),
                               y, k, last.bound);
      }
    }

    precondition(r, z);
    const double rz_next = r.dot(z);
    const double beta = rz_next / rz;
    rz = rz_next;
    p = z + beta * p;
  }

  Vector true_r;
  shifted_laplacian_apply(g, y, true_r);
  true_r = x - true_r;
  last = certify(y, true_r);
  throw ConvergenceError("solve_shifted_laplacian: iteration cap " +
                             std::to_string(options.max_iterations) + " reached; achieved bound " +
                             std::to_string(last.bound) + " > delta " + std::to_string(delta),
                         y, options.max_iterations, last.bound);
}

}  // namespace fjq
