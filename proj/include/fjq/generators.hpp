#pragma once

#include <cstdint>

#include "fjq/graph.hpp"

namespace fjq::gen {

// Edge weights drawn uniformly from [low, high]; low == high == 1 gives
// unit weights.
struct WeightRange {
  double low = 1.0;
  double high = 1.0;
};

Graph path_graph(std::size_t n, double weight = 1.0);
Graph cycle_graph(std::size_t n, double weight = 1.0);
Graph complete_graph(std::size_t n, double weight = 1.0);

// Connected graph with exactly `m` edges (n - 1 <= m <= n(n-1)/2): a random
// recursive spanning tree plus uniformly random extra pairs.
Graph random_connected(std::size_t n, std::size_t m, std::uint64_t seed, WeightRange weights = {});

// Preferential attachment: each new node links to `links` distinct earlier
// nodes chosen proportionally to degree. Connected, heavy-tailed degrees.
Graph preferential_attachment(std::size_t n, std::size_t links, std::uint64_t seed,
                              WeightRange weights = {});

}  // namespace fjq::gen
