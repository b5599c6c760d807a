#pragma once

// Independent oracles for the test suites. Nothing here calls the library's
// dense or iterative paths; matrices are assembled from the edge list and
// inverted with pivoted LU.

#include <algorithm>
#include <cmath>
#include <functional>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "fjq/generators.hpp"
#include "fjq/graph.hpp"

namespace fjq::testing {

inline Eigen::MatrixXd dense_laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    l(e.head, e.tail) -= e.weight;
    l(e.tail, e.head) -= e.weight;
    l(e.head, e.head) += e.weight;
    l(e.tail, e.tail) += e.weight;
  }
  return l;
}

inline Eigen::MatrixXd dense_shifted(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  return Eigen::MatrixXd::Identity(n, n) + dense_laplacian(g);
}

inline Eigen::MatrixXd oracle_inverse(const Graph& g) {
  return dense_shifted(g).partialPivLu().inverse();
}

inline Vector oracle_equilibrium(const Graph& g, const Vector& s) {
  return dense_shifted(g).partialPivLu().solve(s);
}

// Quantities from their per-node / per-edge definitions, not from the
// quadratic forms the library uses.
struct OracleQuantities {
  double internal_conflict = 0.0;
  double disagreement = 0.0;
  double polarization = 0.0;
  double controversy = 0.0;
  double dc_index = 0.0;
};

inline OracleQuantities oracle_quantities(const Graph& g, const Vector& s) {
  const Vector z = oracle_equilibrium(g, s);
  OracleQuantities q;
  q.internal_conflict = (z - s).squaredNorm();
  for (const Edge& e : g.edges()) {
    const double d = z[e.head] - z[e.tail];
    q.disagreement += e.weight * d * d;
  }
  const double mean = z.sum() / static_cast<double>(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) q.polarization += (z[i] - mean) * (z[i] - mean);
  q.controversy = z.squaredNorm();
  q.dc_index = q.disagreement + q.controversy;
  return q;
}

inline double rel(double exact, double estimate) {
  if (exact == 0.0) return std::abs(estimate);
  return std::abs(exact - estimate) / std::abs(exact);
}

inline double max_abs_diff(const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline Vector random_opinions(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vector s(static_cast<Eigen::Index>(n));
  for (auto& v : s) v = u(rng);
  return s;
}

// Random connected graph with n nodes, m drawn between n-1 and the maximum,
// unit weights when `weighted` is false.
inline Graph random_small_graph(std::size_t n, std::mt19937_64& rng, bool weighted,
                                std::size_t m_cap = 0) {
  std::size_t max_m = n * (n - 1) / 2;
  if (m_cap > 0) max_m = std::min(max_m, m_cap);
  const std::size_t low = n == 0 ? 0 : n - 1;
  const std::size_t m = max_m <= low ? low : std::uniform_int_distribution<std::size_t>(low, max_m)(rng);
  const gen::WeightRange w = weighted ? gen::WeightRange{0.05, 4.0} : gen::WeightRange{};
  return gen::random_connected(n, m, rng(), w);
}

// All connected graphs on n labeled nodes whose edge set is given by the bits
// of `mask` over the pairs (i<j) in lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask, double weight = 1.0) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1u) edges.push_back({i, j, weight});
    }
  }
  return Graph::from_edges(n, edges);
}

// One-sample Kolmogorov-Smirnov statistic sup |F_n(x) - F(x)|.
inline double ks_statistic(Vector samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (Eigen::Index i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

}  // namespace fjq::testing
