#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fjq/generators.hpp"
#include "fjq/solver.hpp"
#include "support.hpp"

namespace fjq {
namespace {

// ||e||_T / ||z||_T with T, z and e computed from the dense oracle.
double t_norm_error(const Graph& g, const Vector& x, const Vector& y) {
  const Eigen::MatrixXd t = testing::dense_shifted(g);
  const Vector z = t.partialPivLu().solve(x);
  const Vector e = y - z;
  return std::sqrt(e.dot(t * e) / z.dot(t * z));
}

TEST(Solver, ZeroRightHandSide) {
  Graph g = gen::path_graph(4);
  SolveResult r = solve_shifted_laplacian(g, Vector::Zero(4), 1e-8);
  EXPECT_EQ(r.report.iterations, 0);
  EXPECT_EQ(r.y, Vector::Zero(4));
}

TEST(Solver, SingleNodeIsIdentity) {
  Graph g = Graph::from_edges(1, {});
  Vector x(1);
  x << 0.37;
  SolveResult r = solve_shifted_laplacian(g, x, 1e-10);
  EXPECT_DOUBLE_EQ(r.y[0], 0.37);
}

TEST(Solver, TwoNodePath) {
  Graph g = gen::path_graph(2);
  Vector x(2);
  x << 1, 0;
  SolveResult r = solve_shifted_laplacian(g, x, 1e-10);
  EXPECT_NEAR(r.y[0], 2.0 / 3.0, 1e-10);
  EXPECT_NEAR(r.y[1], 1.0 / 3.0, 1e-10);
  EXPECT_LE(r.report.certified_delta, 1e-10);
}

TEST(Solver, RejectsBadArguments) {
  Graph g = gen::path_graph(3);
  Vector x = Vector::Ones(3);
  EXPECT_THROW(solve_shifted_laplacian(g, x, 0.0), ValidationError);
  EXPECT_THROW(solve_shifted_laplacian(g, x, -1.0), ValidationError);
  EXPECT_THROW(solve_shifted_laplacian(g, Vector::Ones(2), 1e-6), ValidationError);
  x[1] = std::nan("");
  EXPECT_THROW(solve_shifted_laplacian(g, x, 1e-6), ValidationError);
}

TEST(StoppingRule, Examples) {
  Graph single = Graph::from_edges(1, {});
  EXPECT_DOUBLE_EQ(map_delta_to_stopping_rule(single, 0.1, Vector::Ones(1)), 0.1);
  Graph p2 = gen::path_graph(2);
  EXPECT_DOUBLE_EQ(map_delta_to_stopping_rule(p2, 1e-6, Vector::Ones(2)), 1e-6 / std::sqrt(3.0));
}

TEST(StoppingRule, MonotoneInDelta) {
  Graph g = gen::random_connected(30, 80, 4, {0.2, 3.0});
  Vector x = Vector::Ones(30);
  double prev = map_delta_to_stopping_rule(g, 1.0, x);
  for (double d = 0.5; d > 1e-300; d *= 0.5) {
    const double tau = map_delta_to_stopping_rule(g, d, x);
    EXPECT_LT(tau, prev);
    prev = tau;
  }
}

TEST(Solver, CertificateHoldsAgainstDenseOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 150;
    Graph g = testing::random_small_graph(n, rng, trial % 2 == 0, 5 * n);
    Vector x = testing::random_opinions(n, rng);
    for (double delta : {1e-3, 1e-8, 1e-12}) {
      SolveOptions opts;
      opts.preconditioner = trial % 3 == 0 ? Preconditioner::kIncompleteCholesky : Preconditioner::kJacobi;
      SolveResult r = solve_shifted_laplacian(g, x, delta, opts);
      EXPECT_LE(r.report.certified_delta, delta);
      EXPECT_LE(t_norm_error(g, x, r.y), delta) << "n=" << n << " delta=" << delta;
    }
  }
}

TEST(Solver, FinalResidualMatchesRecomputation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 5 + rng() % 100;
    Graph g = testing::random_small_graph(n, rng, true, 4 * n);
    Vector x = testing::random_opinions(n, rng);
    SolveResult r = solve_shifted_laplacian(g, x, 1e-9);
    Vector ty;
    shifted_laplacian_apply(g, r.y, ty);
    const double recomputed = (x - ty).norm();
    EXPECT_LE(testing::rel(recomputed, r.report.final_residual), 1e-13);
    EXPECT_DOUBLE_EQ(r.report.relative_residual, r.report.final_residual / x.norm());
    // Against the dense operator the agreement is limited by the product's rounding.
    const double dense = (x - testing::dense_shifted(g) * r.y).norm();
    EXPECT_NEAR(dense, r.report.final_residual, 1e-13 * x.norm() * (1.0 + g.max_weight() * n));
  }
}

TEST(Solver, TighterDeltaNeverCertifiesWeaker) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 10 + rng() % 150;
    Graph g = testing::random_small_graph(n, rng, true, 4 * n);
    Vector x = testing::random_opinions(n, rng);
    int prev_iters = 0;
    double prev_cert = 1.0;
    for (double delta : {1e-2, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12}) {
      SolveResult r = solve_shifted_laplacian(g, x, delta);
      EXPECT_LE(r.report.certified_delta, prev_cert);
      EXPECT_GE(r.report.iterations, prev_iters);
      prev_cert = r.report.certified_delta;
      prev_iters = r.report.iterations;
    }
  }
}

TEST(Solver, IterationCapRaisesConvergenceError) {
  Graph g = gen::random_connected(300, 1500, 8, {0.1, 50.0});
  std::mt19937_64 rng(1);
  Vector x = testing::random_opinions(300, rng);
  SolveOptions opts;
  opts.max_iterations = 2;
  try {
    solve_shifted_laplacian(g, x, 1e-12, opts);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.exit_code(), 4);
    EXPECT_EQ(e.iterations(), 2);
    EXPECT_EQ(e.best_iterate().size(), 300);
    EXPECT_GT(e.achieved_bound(), 1e-12);
  }
}

TEST(Solver, Deterministic) {
  Graph g = gen::preferential_attachment(2000, 3, 12, {0.5, 2.0});
  std::mt19937_64 rng(3);
  Vector x = testing::random_opinions(2000, rng);
  SolveResult a = solve_shifted_laplacian(g, x, 1e-10);
  SolveResult b = solve_shifted_laplacian(g, x, 1e-10);
  EXPECT_EQ(a.y, b.y);
  EXPECT_EQ(a.report.iterations, b.report.iterations);
}

TEST(SolverConfig, DeltaModes) {
  SolverConfig verbatim = resolve_solver_config(1e-6, 1e-10, DeltaMode::kTheoretical, 100);
  EXPECT_EQ(verbatim.delta_effective, 1e-10);
  EXPECT_FALSE(verbatim.clamped);
  EXPECT_EQ(verbatim.mode, DeltaMode::kTheoretical);

  SolverConfig fallback = resolve_solver_config(1e-6, 1e-16, DeltaMode::kTheoretical, 100);
  EXPECT_EQ(fallback.mode, DeltaMode::kPractical);
  EXPECT_EQ(fallback.requested_mode, DeltaMode::kTheoretical);
  EXPECT_EQ(fallback.delta_effective, kPracticalFloor);
  EXPECT_TRUE(fallback.clamped);

  SolverConfig practical = resolve_solver_config(1e-6, 1e-8, DeltaMode::kPractical, 100);
  EXPECT_EQ(practical.delta_effective, 1e-8);
  EXPECT_FALSE(practical.clamped);

  EXPECT_THROW(resolve_solver_config(0.0, 1e-8, DeltaMode::kPractical, 100), ValidationError);
  EXPECT_THROW(resolve_solver_config(0.5, 1e-8, DeltaMode::kPractical, 100), ValidationError);
  EXPECT_THROW(resolve_solver_config(1e-6, 1e-8, DeltaMode::kPractical, 0), ValidationError);

  EXPECT_EQ(parse_delta_mode("practical-tolerance"), DeltaMode::kPractical);
  EXPECT_EQ(parse_delta_mode("theoretical-delta"), DeltaMode::kTheoretical);
  EXPECT_THROW(parse_delta_mode("loose"), ValidationError);
}

}  // namespace
}  // namespace fjq
