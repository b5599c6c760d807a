#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "fjq/types.hpp"

namespace fjq {

// Undirected weighted edge. Within a Graph, head < tail always holds, which
// fixes the orientation used by the incidence operator.
struct Edge {
  NodeId head = 0;
  NodeId tail = 0;
  double weight = 1.0;
};

// Counts of input edges discarded while forming a simple graph.
struct CleanupStats {
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
};

// Immutable undirected weighted simple graph in compressed sparse row form.
//
// The adjacency arrays hold each edge twice (once per endpoint), sorted by
// neighbor id within every row. Edges are stored once, canonically oriented
// (head < tail) and sorted lexicographically; that order defines the layout
// of edge vectors returned by incidence_weighted_apply().
class Graph {
 public:
  Graph() = default;

  // Builds a simple graph on nodes 0..n-1. Self-loops are dropped and
  // repeated undirected pairs keep the first occurrence; both are counted in
  // `stats` when provided. Throws ValidationError on out-of-range endpoints
  // and on weights that are not finite and strictly positive.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          CleanupStats* stats = nullptr);

  std::size_t num_nodes() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
  }
  std::span<const double> neighbor_weights(NodeId u) const {
    return {weights_.data() + offsets_[u], weights_.data() + offsets_[u + 1]};
  }

  const std::vector<std::size_t>& offsets() const { return offsets_; }
  const std::vector<NodeId>& adjacency() const { return neighbors_; }
  const std::vector<double>& adjacency_weights() const { return weights_; }

  // Weighted degree d_i = sum of incident edge weights.
  const Vector& degrees() const { return degrees_; }

  // Extremal edge weights; both 0 for an edgeless graph.
  double min_weight() const { return w_min_; }
  double max_weight() const { return w_max_; }

  bool unit_weights() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
  std::vector<double> weights_;
  Vector degrees_;
  double w_min_ = 0.0;
  double w_max_ = 0.0;
};

// ---------------------------------------------------------------------------
// Kernels. None of these materialize a matrix.

// (Lx)_i = d_i x_i - sum_{j in N(i)} w_ij x_j.
Vector laplacian_apply(const Graph& g, const Vector& x);
void laplacian_apply(const Graph& g, const Vector& x, Vector& out);

// ((I+L)x)_i, used by the solver.
void shifted_laplacian_apply(const Graph& g, const Vector& x, Vector& out);

// Per-edge sqrt(w_e) (x_head - x_tail) in Graph::edges() order.
// Its squared norm equals x^T L x.
Vector incidence_weighted_apply(const Graph& g, const Vector& x);

// ---------------------------------------------------------------------------
// Ingestion.

enum class IndexBase { kAuto, kZero, kOne };

struct LoadedGraph {
  Graph graph;
  // Compact id -> node id as written in the file, ascending.
  std::vector<std::uint64_t> original_ids;
  CleanupStats stats;
  // Resolved base (0 or 1).
  int index_base = 0;
};

// Parses whitespace-separated "u v [w]" lines. Blank lines and lines starting
// with '#' or '%' are skipped; columns past the third are ignored. Node ids
// are compacted to 0..n-1 in ascending order of the file id.
LoadedGraph load_edge_list(const std::filesystem::path& path,
                           IndexBase base = IndexBase::kAuto);
LoadedGraph parse_edge_list(std::istream& in, IndexBase base = IndexBase::kAuto);

// Writes "u v w" lines using the given external ids (compact ids when empty).
void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::uint64_t> external_ids = {});

// ---------------------------------------------------------------------------
// Components.

struct ComponentExtraction {
  Graph graph;
  // Old id -> new id, or -1 for nodes outside the component.
  std::vector<std::int64_t> old_to_new;
  // New id -> old id, ascending.
  std::vector<NodeId> new_to_old;
};

// Per-node component label (labels are dense, ordered by smallest member).
std::vector<NodeId> component_labels(const Graph& g, std::size_t* num_components = nullptr);

bool is_connected(const Graph& g);

// Induced subgraph on the largest connected component, relabeled 0..n'-1 in
// increasing old-id order. Ties go to the component with the smallest node.
// Throws ValidationError on an empty graph.
ComponentExtraction largest_connected_component(const Graph& g);

// Two-column "old new" text. `old_ids` translates old compact ids to external
// ids when non-empty.
void write_relabel_map(std::ostream& out, const ComponentExtraction& lcc,
                       std::span<const std::uint64_t> old_ids = {});

}  // namespace fjq
