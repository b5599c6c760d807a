#include <algorithm>
#include <string>

#include "fjq/exact.hpp"

namespace fjq {

namespace {

// Union-find with union by size and undo; no path compression so that
// rollback stays exact.
class RollbackDsu {
 public:
  explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void rollback() {
    const std::size_t b = history_.back();
    history_.pop_back();
    const std::size_t a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

  std::size_t size_of_root(std::size_t root) const { return size_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

// Every acyclic edge subset F is one spanning forest; it admits
// prod_T |T| rootings. Of those, the ones with j in the tree rooted at i
// fix the root of T(i) = T(j) and leave prod_{T' != T(i)} |T'| choices.
class Enumerator {
 public:
  Enumerator(const Graph& g, ForestCensus& census)
      : g_(g), census_(census), dsu_(g.num_nodes()), roots_(g.num_nodes()) {}

  void run() { visit(0, 1.0); }

 private:
  void visit(std::size_t edge, double weight) {
    const auto& edges = g_.edges();
    if (edge == edges.size()) {
      accumulate(weight);
      return;
    }
    visit(edge + 1, weight);
    const Edge& e = edges[edge];
    if (dsu_.unite(e.head, e.tail)) {
      visit(edge + 1, weight * e.weight);
      dsu_.rollback();
    }
  }

  void accumulate(double weight) {
    const std::size_t n = census_.n;
    std::uint64_t rootings = 1;
    for (std::size_t v = 0; v < n; ++v) {
      roots_[v] = dsu_.find(v);
      if (roots_[v] == v) rootings *= dsu_.size_of_root(v);
    }
    if (census_.integral) {
      census_.total_count += rootings;
    } else {
      census_.total_weight += weight * static_cast<double>(rootings);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t others = rootings / dsu_.size_of_root(roots_[i]);
      for (std::size_t j = 0; j < n; ++j) {
        if (roots_[j] != roots_[i]) continue;
        if (census_.integral) {
          census_.pair_count[i * n + j] += others;
        } else {
          census_.pair_weight[i * n + j] += weight * static_cast<double>(others);
        }
      }
    }
  }

  const Graph& g_;
  ForestCensus& census_;
  RollbackDsu dsu_;
  std::vector<std::size_t> roots_;
};

}  // namespace

ForestCensus enumerate_rooted_forests(const Graph& g, std::size_t cap) {
  cap = std::min(cap, kForestEnumerationCap);
  const std::size_t n = g.num_nodes();
  if (n > cap) {
    throw GuardError("enumerate_rooted_forests: n=" + std::to_string(n) +
                     " exceeds the enumeration cap of " + std::to_string(cap) + " nodes");
  }
  ForestCensus census;
  census.n = n;
  census.integral = g.unit_weights();
  if (census.integral) {
    census.pair_count.assign(n * n, 0);
  } else {
    census.pair_weight.assign(n * n, 0.0);
  }
  if (n == 0) return census;
  Enumerator(g, census).run();
  return census;
}

}  // namespace fjq
