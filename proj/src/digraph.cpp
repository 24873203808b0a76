#include "quasicut/digraph.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "quasicut/errors.hpp"

namespace quasicut {

WeightedDigraph::WeightedDigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), out_(n > 0 ? n : 0), in_(n > 0 ? n : 0) {
  if (n < 0) throw Error(Errc::invalid_input, "negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    const Edge& e = edges_[id];
    if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_)
      throw Error(Errc::bad_vertex_id, "edge endpoint out of range");
    if (e.tail == e.head)
      throw Error(Errc::bad_vertex_id, "self-loop");
    if (!seen.insert({e.tail, e.head}).second)
      throw Error(Errc::duplicate_edge, "duplicate edge");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
      throw Error(Errc::invalid_input, "edge weight must be finite and non-negative");
    out_[e.tail].push_back(id);
    in_[e.head].push_back(id);
  }
}

int WeightedDigraph::edge_id(int u, int v) const {
  if (u < 0 || u >= n_) return -1;
  for (int id : out_[u])
    if (edges_[id].head == v) return id;
  return -1;
}

WeightedDigraph WeightedDigraph::with_weights(const std::vector<double>& weights) const {
  if (static_cast<int>(weights.size()) != edge_count())
    throw Error(Errc::invalid_input, "weight vector size mismatch");
  std::vector<Edge> es = edges_;
  for (size_t i = 0; i < es.size(); ++i) es[i].weight = weights[i];
  return WeightedDigraph(n_, std::move(es));
}

}  // namespace quasicut
