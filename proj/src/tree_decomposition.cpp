#include "quasicut/tree_decomposition.hpp"

#include <algorithm>

#include "quasicut/errors.hpp"

namespace quasicut {

int TreeDecomposition::width() const {
  size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return static_cast<int>(w) - 1;
}

void TreeDecomposition::validate(const WeightedDigraph& g) const {
  const int nb = static_cast<int>(bags.size());
  if (nb == 0) throw Error(Errc::invalid_decomposition, "no bags");
  for (const auto& b : bags)
    for (int v : b)
      if (v < 0 || v >= g.vertex_count())
        throw Error(Errc::invalid_decomposition, "bag vertex out of range");
  if (static_cast<int>(tree_edges.size()) != nb - 1)
    throw Error(Errc::invalid_decomposition, "bag links must form a tree");
  std::vector<std::vector<int>> adj(nb);
  for (auto [a, b] : tree_edges) {
    if (a < 0 || a >= nb || b < 0 || b >= nb || a == b)
      throw Error(Errc::invalid_decomposition, "bad bag link");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(nb, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    ++reached;
    for (int c : adj[b])
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
  }
  if (reached != nb) throw Error(Errc::invalid_decomposition, "bag links must form a tree");

  auto bag_has = [&](int b, int v) {
    return std::find(bags[b].begin(), bags[b].end(), v) != bags[b].end();
  };
  for (int v = 0; v < g.vertex_count(); ++v) {
    // coverage plus the connected-subtree condition for v
    std::vector<int> holders;
    for (int b = 0; b < nb; ++b)
      if (bag_has(b, v)) holders.push_back(b);
    if (holders.empty()) throw Error(Errc::invalid_decomposition, "vertex missing from all bags");
    std::vector<char> hseen(nb, 0);
    std::vector<int> hstack{holders[0]};
    hseen[holders[0]] = 1;
    int hcount = 0;
    while (!hstack.empty()) {
      int b = hstack.back();
      hstack.pop_back();
      ++hcount;
      for (int c : adj[b])
        if (!hseen[c] && bag_has(c, v)) {
          hseen[c] = 1;
          hstack.push_back(c);
        }
    }
    if (hcount != static_cast<int>(holders.size()))
      throw Error(Errc::invalid_decomposition, "vertex bags are not a connected subtree");
  }
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (int b = 0; b < nb && !covered; ++b)
      covered = bag_has(b, e.tail) && bag_has(b, e.head);
    if (!covered) throw Error(Errc::invalid_decomposition, "edge not covered by any bag");
  }
}

}  // namespace quasicut
