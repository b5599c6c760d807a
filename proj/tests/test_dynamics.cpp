#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "fjq/dynamics.hpp"
#include "fjq/generators.hpp"
#include "support.hpp"

namespace fjq {
namespace {

TEST(Dynamics, ConsensusIsFixedPoint) {
  Graph g = gen::random_connected(20, 40, 1, {0.5, 2.0});
  Vector s = Vector::Constant(20, 0.4);
  FjResult r = fj_iterate(g, s, 1e-12, 100);
  EXPECT_LE(r.stats.iterations, 1);
  EXPECT_LT(testing::max_abs_diff(r.z, s), 1e-15);
}

TEST(Dynamics, TwoNodePath) {
  Graph g = gen::path_graph(2);
  Vector s(2);
  s << 1, 0;
  FjResult r = fj_iterate(g, s, 1e-12, 10000);
  EXPECT_NEAR(r.z[0], 2.0 / 3.0, 1e-11);
  EXPECT_NEAR(r.z[1], 1.0 / 3.0, 1e-11);
  EXPECT_LT(r.stats.final_change, 1e-12);
}

TEST(Dynamics, SingleNode) {
  Graph g = Graph::from_edges(1, {});
  Vector s(1);
  s << 0.8;
  FjResult r = fj_iterate(g, s, 1e-12, 10);
  EXPECT_EQ(r.z[0], 0.8);
}

TEST(Dynamics, RejectsBadArguments) {
  Graph g = gen::path_graph(3);
  EXPECT_THROW(fj_iterate(g, Vector::Zero(3), 0.0, 10), ValidationError);
  EXPECT_THROW(fj_iterate(g, Vector::Zero(2), 1e-6, 10), ValidationError);
}

TEST(Dynamics, StepCapCarriesLastIterate) {
  Graph g = gen::path_graph(50);
  Vector s = Vector::Zero(50);
  s[0] = 1.0;
  try {
    fj_iterate(g, s, 1e-14, 3);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.iterations(), 3);
    EXPECT_EQ(e.best_iterate().size(), 50);
  }
}

// Stopping at step < tol leaves an error of at most rho/(1-rho) tol, where
// rho = max_i d_i/(1+d_i) is the max-norm of the iteration matrix, i.e. at
// most d_max tol. The 10 tol fixed-point bound is therefore asserted on graphs
// with weighted degree at most 10 and the d_max tol bound on denser ones.
TEST(Dynamics, FixedPointMonotoneConservation) {
  std::mt19937_64 rng(314);
  const double tol = 1e-12;
  int low_degree = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 499;
    const std::size_t m_cap = trial % 4 == 0 ? 4 * n : n + n / 4;
    Graph g = testing::random_small_graph(n, rng, trial % 4 < 2, m_cap);
    const double d_max = g.degrees().maxCoeff();
    const double factor = d_max <= 10.0 ? 10.0 : d_max;
    low_degree += d_max <= 10.0;
    Vector s = testing::random_opinions(n, rng);
    std::vector<double> steps;
    FjResult r = fj_iterate(g, s, tol, 1000000, [&](int, double change) { steps.push_back(change); });
    ASSERT_EQ(static_cast<int>(steps.size()), r.stats.iterations);
    EXPECT_LT(r.stats.final_change, tol);
    EXPECT_LE(testing::max_abs_diff(r.z, testing::oracle_equilibrium(g, s)), factor * tol)
        << "n=" << n << " d_max=" << d_max;
    for (std::size_t k = 2; k < steps.size(); ++k) EXPECT_LE(steps[k], steps[k - 1] + 1e-13);
    EXPECT_LE(std::abs(r.z.sum() - s.sum()), static_cast<double>(n) * factor * tol);
  }
  EXPECT_GE(low_degree, 15);
}

TEST(Dynamics, PathAndCycleWithinTenTol) {
  std::mt19937_64 rng(2);
  const double tol = 1e-12;
  for (const Graph& g : {gen::path_graph(500), gen::cycle_graph(301, 2.5), gen::path_graph(37, 5.0)}) {
    Vector s = testing::random_opinions(g.num_nodes(), rng);
    FjResult r = fj_iterate(g, s, tol, 10000000);
    EXPECT_LE(testing::max_abs_diff(r.z, testing::oracle_equilibrium(g, s)), 10 * tol);
    EXPECT_LE(std::abs(r.z.sum() - s.sum()), static_cast<double>(g.num_nodes()) * 10 * tol);
  }
}

}  // namespace
}  // namespace fjq
