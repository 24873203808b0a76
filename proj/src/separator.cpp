#include "quasicut/separator.hpp"

#include <algorithm>

#include "quasicut/errors.hpp"
#include "quasicut/graph_ops.hpp"

namespace quasicut {

bool is_balanced_separator(const WeightedDigraph& g, const std::vector<int>& subset,
                           const std::vector<int>& k) {
  std::vector<char> in_k(g.vertex_count(), 0);
  for (int v : k) in_k[v] = 1;
  std::vector<int> rest;
  for (int v : subset)
    if (!in_k[v]) rest.push_back(v);
  for (const auto& comp : weak_components(g, rest))
    if (2 * comp.size() > subset.size()) return false;
  return true;
}

// Enumerates size-s subsets of `pool` in lexicographic order.
static bool next_combination(std::vector<int>& idx, int pool_size) {
  const int s = static_cast<int>(idx.size());
  for (int i = s - 1; i >= 0; --i) {
    if (idx[i] < pool_size - (s - i)) {
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::optional<std::vector<int>> balanced_separator_in(const WeightedDigraph& g,
                                                      const std::vector<int>& subset, int t) {
  std::vector<int> pool = subset;
  std::sort(pool.begin(), pool.end());
  const int m = static_cast<int>(pool.size());
  for (int s = 1; s <= std::min(t, m); ++s) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    do {
      std::vector<int> k(s);
      for (int i = 0; i < s; ++i) k[i] = pool[idx[i]];
      if (is_balanced_separator(g, subset, k)) return k;
    } while (next_combination(idx, m));
  }
  return std::nullopt;
}

std::optional<std::vector<int>> balanced_separator(const WeightedDigraph& g, int t) {
  std::vector<int> all(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
  return balanced_separator_in(g, all, t);
}

std::vector<int> separator_from_decomposition(const WeightedDigraph& g,
                                              const TreeDecomposition& td,
                                              const std::vector<int>& subset) {
  const int nb = static_cast<int>(td.bags.size());
  std::vector<char> in_subset(g.vertex_count(), 0);
  for (int v : subset) in_subset[v] = 1;

  // Each subset vertex weights its lowest-id bag.
  std::vector<long long> weight(nb, 0);
  for (int v : subset) {
    for (int b = 0; b < nb; ++b)
      if (std::find(td.bags[b].begin(), td.bags[b].end(), v) != td.bags[b].end()) {
        ++weight[b];
        break;
      }
  }
  std::vector<std::vector<int>> adj(nb);
  for (auto [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  // Centroid: bag minimizing the heaviest component of the bag tree
  // with that bag removed; ties to the smallest bag id.
  long long total = 0;
  for (long long w : weight) total += w;
  int best_bag = -1;
  long long best_heavy = -1;
  std::vector<long long> down(nb, 0);
  std::vector<int> parent(nb, -1), order;
  order.reserve(nb);
  std::vector<int> stack{0};
  std::vector<char> seen(nb, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    order.push_back(b);
    for (int c : adj[b])
      if (!seen[c]) {
        seen[c] = 1;
        parent[c] = b;
        stack.push_back(c);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    down[*it] += weight[*it];
    if (parent[*it] >= 0) down[parent[*it]] += down[*it];
  }
  for (int b = 0; b < nb; ++b) {
    long long heavy = total - down[b];  // the side through the parent
    for (int c : adj[b])
      if (c != parent[b]) heavy = std::max(heavy, down[c]);
    if (best_bag < 0 || heavy < best_heavy) {
      best_bag = b;
      best_heavy = heavy;
    }
  }

  auto restrict_bag = [&](int b) {
    std::vector<int> k;
    for (int v : td.bags[b])
      if (in_subset[v]) k.push_back(v);
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    return k;
  };

  std::vector<int> k = restrict_bag(best_bag);
  if (is_balanced_separator(g, subset, k)) return k;
  // The centroid argument guarantees balance for valid decompositions;
  // scan all bags as a safety net before giving up.
  for (int b = 0; b < nb; ++b) {
    k = restrict_bag(b);
    if (is_balanced_separator(g, subset, k)) return k;
  }
  throw Error(Errc::separator_failure, "no decomposition bag balances the subgraph");
}

SeparatorProvider exhaustive_separator_provider(int t) {
  if (t < 1) throw Error(Errc::invalid_input, "separator size bound must be positive");
  return [t](const WeightedDigraph& g, const std::vector<int>& subset) {
    auto k = balanced_separator_in(g, subset, t);
    if (!k)
      throw Error(Errc::separator_failure,
                  "no balanced separator of size <= " + std::to_string(t));
    return *k;
  };
}

SeparatorProvider decomposition_separator_provider(TreeDecomposition td) {
  return [td = std::move(td)](const WeightedDigraph& g, const std::vector<int>& subset) {
    return separator_from_decomposition(g, td, subset);
  };
}

}  // namespace quasicut
