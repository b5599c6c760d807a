#pragma once

#include <string_view>

#include "fjq/graph.hpp"
#include "fjq/types.hpp"

namespace fjq {

// How the requested accuracy delta is turned into the one actually used.
//
// kTheoretical uses the caller's delta verbatim while it is at least
// kTheoreticalFloor; below that the run falls back to kPractical.
// kPractical clamps delta from below at kPracticalFloor.
enum class DeltaMode { kTheoretical, kPractical };

inline constexpr double kTheoreticalFloor = 1e-14;
inline constexpr double kPracticalFloor = 1e-12;

std::string_view to_string(DeltaMode mode);
DeltaMode parse_delta_mode(std::string_view text);

enum class Preconditioner { kJacobi, kIncompleteCholesky };

struct SolverConfig {
  double epsilon = 1e-6;
  double delta_theoretical = 0.0;
  double delta_effective = 0.0;
  int max_iterations = 10000;
  // Mode requested by the caller and the mode the run ended up in.
  DeltaMode requested_mode = DeltaMode::kTheoretical;
  DeltaMode mode = DeltaMode::kTheoretical;
  bool clamped = false;
  Preconditioner preconditioner = Preconditioner::kJacobi;

  // Smallest delta the effective mode accepts.
  double floor() const { return mode == DeltaMode::kPractical ? kPracticalFloor : kTheoreticalFloor; }
};

// Fills delta_effective, mode and clamped from delta_theoretical and
// requested_mode. Throws ValidationError unless 0 < epsilon < 1/2.
SolverConfig resolve_solver_config(double epsilon, double delta_theoretical, DeltaMode mode,
                                   int max_iterations = 10000,
                                   Preconditioner preconditioner = Preconditioner::kJacobi);

struct SolveReport {
  int iterations = 0;
  // ||x - (I+L)y|| (absolute, 2-norm) for the returned y.
  double final_residual = 0.0;
  double relative_residual = 0.0;
  // Upper bound on ||y - (I+L)^{-1}x||_T / ||(I+L)^{-1}x||_T, T = I+L.
  double certified_delta = 0.0;
  double requested_delta = 0.0;
  // Relative residual that alone suffices for the requested delta.
  double residual_threshold = 0.0;
  // Times the residual was recomputed from scratch to confirm a stop.
  int true_residual_checks = 0;
};

struct SolveResult {
  Vector y;
  SolveReport report;
};

struct SolveOptions {
  int max_iterations = 10000;
  Preconditioner preconditioner = Preconditioner::kJacobi;
  // Fail when the best residual improves by less than this relative amount
  // over `stagnation_window` iterations.
  double stagnation_improvement = 1e-3;
  int stagnation_window = 50;
};

// Relative 2-norm residual threshold tau such that ||x-(I+L)y|| <= tau ||x||
// implies the T-norm contract at `delta`.
//
// Proof sketch. Let T = I+L, z = T^{-1}x, e = y - z, r = x - Ty = -Te.
// Every eigenvalue of T lies in [1, 1 + n w_max] because 0 <= lambda(L) <=
// n w_max. Hence
//   ||e||_T^2 = r^T T^{-1} r <= ||r||^2                (lambda_min(T) >= 1)
//   ||z||_T^2 = x^T T^{-1} x >= ||x||^2 / (1 + n w_max) (lambda_max bound)
// so ||e||_T / ||z||_T <= (||r|| / ||x||) sqrt(1 + n w_max), and
// tau = delta / sqrt(1 + n w_max) is sufficient.
double map_delta_to_stopping_rule(const Graph& g, double delta, const Vector& x);

// Preconditioned conjugate gradient on (I+L)y = x starting from y = 0.
//
// Returns y with ||y - (I+L)^{-1}x||_{I+L} <= delta ||(I+L)^{-1}x||_{I+L}.
// Two bounds certify a candidate, and the smaller one is reported:
//   a priori:     (||r|| / ||x||) sqrt(1 + n w_max)
//   a posteriori: ||r|| / (||y||_T - ||r||), valid when ||y||_T > ||r||,
//                 since ||e||_T <= ||r|| and ||z||_T >= ||y||_T - ||e||_T.
// Both are evaluated on the true residual x - (I+L)y; the recurrence
// residual only decides when to look.
//
// Throws ValidationError for delta <= 0, non-finite x or a length mismatch,
// and ConvergenceError (carrying the best iterate and its bound) when the
// iteration cap is reached or the residual stagnates.
SolveResult solve_shifted_laplacian(const Graph& g, const Vector& x, double delta,
                                    const SolveOptions& options = {});

}  // namespace fjq
