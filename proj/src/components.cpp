#include <algorithm>
#include <limits>
#include <ostream>

#include "fjq/graph.hpp"

namespace fjq {

std::vector<NodeId> component_labels(const Graph& g, std::size_t* num_components) {
  constexpr NodeId kUnset = std::numeric_limits<NodeId>::max();
  const std::size_t n = g.num_nodes();
  std::vector<NodeId> label(n, kUnset);
  std::vector<NodeId> stack;
  NodeId next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(static_cast<NodeId>(s));
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (label[v] == kUnset) {
          label[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  if (num_components != nullptr) *num_components = next;
  return label;
}

bool is_connected(const Graph& g) {
  if (g.num_nodes() == 0) return false;
  std::size_t count = 0;
  component_labels(g, &count);
  return count == 1;
}

ComponentExtraction largest_connected_component(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n == 0) throw ValidationError("largest_connected_component: empty graph");

  std::size_t count = 0;
  std::vector<NodeId> label = component_labels(g, &count);
  std::vector<std::size_t> sizes(count, 0);
  for (NodeId l : label) ++sizes[l];
  // max_element returns the first maximum, i.e. the component with the
  // smallest member since labels are assigned in node order.
  const auto best = static_cast<NodeId>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  ComponentExtraction out;
  out.old_to_new.assign(n, -1);
  for (std::size_t u = 0; u < n; ++u) {
    if (label[u] == best) {
      out.old_to_new[u] = static_cast<std::int64_t>(out.new_to_old.size());
      out.new_to_old.push_back(static_cast<NodeId>(u));
    }
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (label[e.head] == best) {
      edges.push_back({static_cast<NodeId>(out.old_to_new[e.head]),
                       static_cast<NodeId>(out.old_to_new[e.tail]), e.weight});
    }
  }
  out.graph = Graph::from_edges(out.new_to_old.size(), edges);
  return out;
}

void write_relabel_map(std::ostream& out, const ComponentExtraction& lcc,
                       std::span<const std::uint64_t> old_ids) {
  for (std::size_t i = 0; i < lcc.new_to_old.size(); ++i) {
    const NodeId old = lcc.new_to_old[i];
    out << (old_ids.empty() ? static_cast<std::uint64_t>(old) : old_ids[old]) << ' ' << i << '\n';
  }
}

}  // namespace fjq
