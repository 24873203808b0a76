#include "quasicut/graph_ops.hpp"

#include <algorithm>
#include <queue>

#include "quasicut/errors.hpp"
#include "quasicut/limits.hpp"

namespace quasicut {

DistMatrix shortest_path_quasimetric(const WeightedDigraph& g) {
  const int n = g.vertex_count();
  if (n > limits().max_n)
    throw Error(Errc::too_large, "graph exceeds all-pairs size cap (QUASICUT_MAX_N)");
  DistMatrix d(n);
  for (const Edge& e : g.edges())
    d.at(e.tail, e.head) = std::min(d.at(e.tail, e.head), e.weight);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const double dik = d.at(i, k);
      if (!finite_dist(dik)) continue;
      for (int j = 0; j < n; ++j) {
        const double via = dik + d.at(k, j);
        if (via < d.at(i, j)) d.at(i, j) = via;
      }
    }
  return d;
}

bool is_bidirected_tree(const WeightedDigraph& g) {
  const int n = g.vertex_count();
  for (const Edge& e : g.edges())
    if (!g.has_edge(e.head, e.tail)) return false;
  if (g.edge_count() != 2 * (n - 1)) return false;
  if (n == 0) return false;
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return weak_components(g, all).size() == 1;
}

bool is_dag(const WeightedDigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> indeg(n, 0);
  for (const Edge& e : g.edges()) ++indeg[e.head];
  std::queue<int> q;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) q.push(v);
  int done = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++done;
    for (int id : g.out_edges(v))
      if (--indeg[g.edge(id).head] == 0) q.push(g.edge(id).head);
  }
  return done == n;
}

WeightedDigraph subdivide_three(const WeightedDigraph& g) {
  if (!is_dag(g)) throw Error(Errc::not_a_dag, "subdivision requires a DAG");
  const int n = g.vertex_count();
  std::vector<Edge> out;
  out.reserve(3 * g.edges().size());
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    const int x = n + 2 * k;
    const int y = n + 2 * k + 1;
    const double w = e.weight / 3.0;
    out.push_back({e.tail, x, w});
    out.push_back({x, y, w});
    out.push_back({y, e.head, w});
  }
  return WeightedDigraph(n + 2 * g.edge_count(), std::move(out));
}

std::vector<std::vector<int>> weak_components(const WeightedDigraph& g,
                                              const std::vector<int>& subset) {
  std::vector<char> in_subset(g.vertex_count(), 0);
  for (int v : subset) in_subset[v] = 1;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<std::vector<int>> comps;
  std::vector<int> order = subset;
  std::sort(order.begin(), order.end());
  for (int start : order) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      auto visit = [&](int u) {
        if (in_subset[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      };
      for (int id : g.out_edges(v)) visit(g.edge(id).head);
      for (int id : g.in_edges(v)) visit(g.edge(id).tail);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<char> reachable_from(const WeightedDigraph& g, int s,
                                 const std::vector<int>& removed_edges) {
  std::vector<char> removed(g.edge_count(), 0);
  for (int id : removed_edges) removed[id] = 1;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int id : g.out_edges(v)) {
      if (removed[id]) continue;
      int u = g.edge(id).head;
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

}  // namespace quasicut
