#include "fjq/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

namespace fjq {

namespace {

std::uint64_t pair_key(NodeId a, NodeId b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

void check_length(const Graph& g, const Vector& x, const char* op) {
  if (static_cast<std::size_t>(x.size()) != g.num_nodes()) {
    throw ValidationError(std::string(op) + ": vector length " + std::to_string(x.size()) +
                          " does not match node count " + std::to_string(g.num_nodes()));
  }
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> input, CleanupStats* stats) {
  if (n > std::numeric_limits<NodeId>::max()) {
    throw ValidationError("node count exceeds 32-bit id range");
  }
  CleanupStats local;
  Graph g;

  // Canonicalize and keep the first occurrence of each undirected pair.
  std::vector<Edge> kept;
  kept.reserve(input.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(input.size());
  for (const Edge& e : input) {
    if (e.head >= n || e.tail >= n) {
      throw ValidationError("edge endpoint out of range: (" + std::to_string(e.head) + ", " +
                            std::to_string(e.tail) + ") with n=" + std::to_string(n));
    }
    if (!(std::isfinite(e.weight) && e.weight > 0.0)) {
      throw ValidationError("edge (" + std::to_string(e.head) + ", " + std::to_string(e.tail) +
                            ") has non-positive or non-finite weight " +
                            std::to_string(e.weight));
    }
    if (e.head == e.tail) {
      ++local.self_loops;
      continue;
    }
    Edge c{std::min(e.head, e.tail), std::max(e.head, e.tail), e.weight};
    if (!seen.insert(pair_key(c.head, c.tail)).second) {
      ++local.duplicates;
      continue;
    }
    kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end(), [](const Edge& a, const Edge& b) {
    return a.head != b.head ? a.head < b.head : a.tail < b.tail;
  });

  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : kept) {
    ++g.offsets_[e.head + 1];
    ++g.offsets_[e.tail + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.neighbors_.resize(2 * kept.size());
  g.weights_.resize(2 * kept.size());

  // Filling rows in lexicographic edge order yields sorted neighbor lists:
  // row u first receives tails smaller than u (from edges where u is the tail,
  // which come in increasing head order) and then heads larger than u.
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // First pass: the "smaller neighbor" entries, i.e. edges where u is the tail.
  for (const Edge& e : kept) {
    std::size_t k = cursor[e.tail]++;
    g.neighbors_[k] = e.head;
    g.weights_[k] = e.weight;
  }
  for (const Edge& e : kept) {
    std::size_t k = cursor[e.head]++;
    g.neighbors_[k] = e.tail;
    g.weights_[k] = e.weight;
  }

  g.degrees_ = Vector::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t u = 0; u < n; ++u) {
    double d = 0.0;
    for (std::size_t k = g.offsets_[u]; k < g.offsets_[u + 1]; ++k) d += g.weights_[k];
    g.degrees_[static_cast<Eigen::Index>(u)] = d;
  }
  if (!kept.empty()) {
    auto [lo, hi] = std::minmax_element(kept.begin(), kept.end(), [](const Edge& a, const Edge& b) {
      return a.weight < b.weight;
    });
    g.w_min_ = lo->weight;
    g.w_max_ = hi->weight;
  }
  g.edges_ = std::move(kept);
  if (stats != nullptr) *stats = local;
  return g;
}

bool Graph::unit_weights() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight == 1.0; });
}

void laplacian_apply(const Graph& g, const Vector& x, Vector& out) {
  check_length(g, x, "laplacian_apply");
  const std::size_t n = g.num_nodes();
  out.resize(static_cast<Eigen::Index>(n));
  const auto& off = g.offsets();
  const auto& adj = g.adjacency();
  const auto& w = g.adjacency_weights();
  const Vector& d = g.degrees();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = off[i]; k < off[i + 1]; ++k) acc += w[k] * x[adj[k]];
    const auto ii = static_cast<Eigen::Index>(i);
    out[ii] = d[ii] * x[ii] - acc;
  }
}

Vector laplacian_apply(const Graph& g, const Vector& x) {
  Vector out;
  laplacian_apply(g, x, out);
  return out;
}

void shifted_laplacian_apply(const Graph& g, const Vector& x, Vector& out) {
  check_length(g, x, "shifted_laplacian_apply");
  const std::size_t n = g.num_nodes();
  out.resize(static_cast<Eigen::Index>(n));
  const auto& off = g.offsets();
  const auto& adj = g.adjacency();
  const auto& w = g.adjacency_weights();
  const Vector& d = g.degrees();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = off[i]; k < off[i + 1]; ++k) acc += w[k] * x[adj[k]];
    const auto ii = static_cast<Eigen::Index>(i);
    out[ii] = (1.0 + d[ii]) * x[ii] - acc;
  }
}

Vector incidence_weighted_apply(const Graph& g, const Vector& x) {
  check_length(g, x, "incidence_weighted_apply");
  const auto& edges = g.edges();
  Vector out(static_cast<Eigen::Index>(edges.size()));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& ed = edges[e];
    out[static_cast<Eigen::Index>(e)] = std::sqrt(ed.weight) * (x[ed.head] - x[ed.tail]);
  }
  return out;
}

}  // namespace fjq
