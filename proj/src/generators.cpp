#include "fjq/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

namespace fjq::gen {

namespace {

class WeightSampler {
 public:
  WeightSampler(WeightRange range, std::mt19937_64& rng) : range_(range), rng_(rng) {
    if (!(range.low > 0.0 && range.high >= range.low)) {
      throw ValidationError("weight range must satisfy 0 < low <= high");
    }
  }
  double operator()() {
    if (range_.low == range_.high) return range_.low;
    return std::uniform_real_distribution<double>(range_.low, range_.high)(rng_);
  }

 private:
  WeightRange range_;
  std::mt19937_64& rng_;
};

std::uint64_t key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

Graph path_graph(std::size_t n, double weight) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1), weight});
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n, double weight) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n), weight});
  }
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n, double weight) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j), weight});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_connected(std::size_t n, std::size_t m, std::uint64_t seed, WeightRange weights) {
  if (n == 0) throw ValidationError("random_connected: n must be positive");
  const std::size_t max_edges = n * (n - 1) / 2;
  if (m + 1 < n || m > max_edges) {
    throw ValidationError("random_connected: m=" + std::to_string(m) + " outside [n-1, n(n-1)/2]");
  }
  std::mt19937_64 rng(seed);
  WeightSampler weight(weights, rng);

  // Random labels so the tree shape is not tied to node order.
  std::vector<NodeId> label(n);
  std::iota(label.begin(), label.end(), NodeId{0});
  std::shuffle(label.begin(), label.end(), rng);

  std::vector<Edge> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    const NodeId a = label[i], b = label[parent];
    seen.insert(key(a, b));
    edges.push_back({a, b, weight()});
  }
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  while (edges.size() < m) {
    const NodeId a = pick(rng), b = pick(rng);
    if (a == b || !seen.insert(key(a, b)).second) continue;
    edges.push_back({a, b, weight()});
  }
  return Graph::from_edges(n, edges);
}

Graph preferential_attachment(std::size_t n, std::size_t links, std::uint64_t seed,
                              WeightRange weights) {
  if (n == 0 || links == 0) throw ValidationError("preferential_attachment: n and links must be positive");
  std::mt19937_64 rng(seed);
  WeightSampler weight(weights, rng);

  const std::size_t core = std::min(n, links + 1);
  std::vector<Edge> edges;
  // Endpoint multiset: sampling from it is sampling proportionally to degree.
  std::vector<NodeId> endpoints;
  for (std::size_t i = 0; i < core; ++i) {
    for (std::size_t j = i + 1; j < core; ++j) {
      edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j), weight()});
      endpoints.push_back(static_cast<NodeId>(i));
      endpoints.push_back(static_cast<NodeId>(j));
    }
  }
  std::vector<NodeId> chosen;
  for (std::size_t v = core; v < n; ++v) {
    chosen.clear();
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    while (chosen.size() < links) {
      const NodeId u = endpoints[pick(rng)];
      if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) chosen.push_back(u);
    }
    for (NodeId u : chosen) {
      edges.push_back({u, static_cast<NodeId>(v), weight()});
      endpoints.push_back(u);
      endpoints.push_back(static_cast<NodeId>(v));
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace fjq::gen
