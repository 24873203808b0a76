#pragma once

#include <vector>

namespace quasicut {

struct Edge {
  int tail = -1;
  int head = -1;
  double weight = 0.0;
};

// Finite directed graph with non-negative finite edge weights.
// No self-loops, at most one edge per ordered vertex pair.
// Immutable after construction.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  WeightedDigraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  // Edge id for (u, v), or -1.
  int edge_id(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

  // Edge ids leaving / entering a vertex, in input edge order.
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_[v]; }

  // Same structure, different weights (parallel to edges()).
  WeightedDigraph with_weights(const std::vector<double>& weights) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

}  // namespace quasicut
