#include "quasicut/partition_sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "quasicut/errors.hpp"
#include "quasicut/graph_ops.hpp"

namespace quasicut {

namespace {

// Distances to and from the root along the unique tree paths.
struct RootDistances {
  std::vector<double> to_root;
  std::vector<double> from_root;
};

RootDistances tree_root_distances(const WeightedDigraph& tree, int root) {
  const int n = tree.vertex_count();
  RootDistances rd{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  std::vector<char> seen(n, 0);
  std::vector<int> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int id : tree.out_edges(v)) {
      int u = tree.edge(id).head;
      if (seen[u]) continue;
      seen[u] = 1;
      rd.from_root[u] = rd.from_root[v] + tree.edge(id).weight;
      rd.to_root[u] = tree.edge(tree.edge_id(u, v)).weight + rd.to_root[v];
      stack.push_back(u);
    }
  }
  return rd;
}

// Whether some threshold z + i*step (integer i >= 0) lands in [lo, hi).
bool threshold_hits(double lo, double hi, double z, double step) {
  if (!(hi > lo)) return false;
  if (z >= hi) {
    // thresholds only grow from z
    return false;
  }
  long long i0 = 0;
  if (lo > z) {
    i0 = static_cast<long long>(std::ceil((lo - z) / step));
    // guard the rounding of ceil at exact multiples
    while (z + static_cast<double>(i0) * step < lo) ++i0;
    while (i0 > 0 && z + static_cast<double>(i0 - 1) * step >= lo) --i0;
  }
  return z + static_cast<double>(i0) * step < hi;
}

void check_tree_inputs(const WeightedDigraph& tree, double r, int root) {
  if (!(r > 0.0) || !std::isfinite(r)) throw Error(Errc::invalid_input, "radius must be positive");
  if (!is_bidirected_tree(tree)) throw Error(Errc::not_a_tree, "graph is not a bidirected tree");
  if (root < 0 || root >= tree.vertex_count())
    throw Error(Errc::bad_vertex_id, "root out of range");
}

Quasipartition close_surviving_edges(const WeightedDigraph& g, const std::vector<char>& removed) {
  Quasipartition rel(g.vertex_count());
  for (int id = 0; id < g.edge_count(); ++id)
    if (!removed[id]) rel.set(g.edge(id).tail, g.edge(id).head, true);
  return transitive_closure(rel);
}

// Shared support construction: evaluate the sampler at the midpoint of
// every open interval between consecutive breakpoints of [0, zmax] and
// merge identical outcomes, keeping first-seen order.
WeightedSupport support_from_breakpoints(std::vector<double> breakpoints, double zmax,
                                         double radius,
                                         const std::function<Quasipartition(double)>& eval) {
  breakpoints.push_back(0.0);
  breakpoints.push_back(zmax);
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  WeightedSupport support;
  support.radius = radius;
  support.zmax = zmax;
  std::map<Quasipartition, int> index;
  for (size_t k = 0; k + 1 < breakpoints.size(); ++k) {
    const double lo = breakpoints[k], hi = breakpoints[k + 1];
    if (!(hi > lo)) continue;
    Quasipartition p = eval(lo + (hi - lo) / 2.0);
    auto [it, fresh] = index.try_emplace(std::move(p), static_cast<int>(support.items.size()));
    if (fresh) support.items.push_back({it->first, 0.0, {}});
    SupportItem& item = support.items[it->second];
    item.weight += (hi - lo) / zmax;
    item.z_intervals.emplace_back(lo, hi);
  }
  return support;
}

}  // namespace

Quasipartition sample_tree_quasipartition(const WeightedDigraph& tree, double r, int root,
                                          double z) {
  check_tree_inputs(tree, r, root);
  if (!(z >= 0.0) || !(z <= r / 2.0)) throw Error(Errc::z_out_of_range, "z outside [0, r/2]");
  const RootDistances rd = tree_root_distances(tree, root);
  const double step = r / 2.0;
  std::vector<char> removed(tree.edge_count(), 0);
  for (int id = 0; id < tree.edge_count(); ++id) {
    const Edge& e = tree.edge(id);
    if (threshold_hits(rd.to_root[e.head], rd.to_root[e.tail], z, step) ||
        threshold_hits(rd.from_root[e.tail], rd.from_root[e.head], z, step))
      removed[id] = 1;
  }
  return close_surviving_edges(tree, removed);
}

WeightedSupport tree_quasipartition_support(const WeightedDigraph& tree, double r, int root) {
  check_tree_inputs(tree, r, root);
  const RootDistances rd = tree_root_distances(tree, root);
  const double step = r / 2.0;
  std::vector<double> breakpoints;
  auto add_offsets = [&](double d) {
    // d - i*step for the i values that land inside (0, zmax)
    if (!(d > 0.0)) return;
    long long i = std::max(0LL, static_cast<long long>(std::floor(d / step)) - 1);
    for (; static_cast<double>(i) * step < d; ++i) {
      const double b = d - static_cast<double>(i) * step;
      if (b > 0.0 && b < step) breakpoints.push_back(b);
    }
  };
  for (int v = 0; v < tree.vertex_count(); ++v) {
    add_offsets(rd.to_root[v]);
    add_offsets(rd.from_root[v]);
  }
  return support_from_breakpoints(std::move(breakpoints), step, r, [&](double z) {
    return sample_tree_quasipartition(tree, r, root, z);
  });
}

PartitionPlan build_partition_plan(const WeightedDigraph& g, const SeparatorProvider& sep) {
  PartitionPlan plan;
  std::vector<std::vector<int>> pending;
  std::vector<int> all(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
  pending.push_back(std::move(all));
  int level = 0;
  while (!pending.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& subset : pending) {
      if (subset.size() <= 1) continue;
      std::vector<int> k = sep(g, subset);
      if (!is_balanced_separator(g, subset, k))
        throw Error(Errc::separator_failure, "provider returned an unbalanced separator");
      std::vector<char> in_subset(g.vertex_count(), 0);
      for (int v : subset) in_subset[v] = 1;
      for (int v : k)
        if (!in_subset[v])
          throw Error(Errc::separator_failure, "provider returned vertices outside the subset");
      PartitionPlanNode node;
      node.subset = subset;
      node.separator = k;
      node.level = level;
      for (int id = 0; id < g.edge_count(); ++id)
        if (in_subset[g.edge(id).tail] && in_subset[g.edge(id).head]) node.edge_ids.push_back(id);
      plan.max_separator = std::max(plan.max_separator, static_cast<int>(k.size()));
      std::vector<int> rest;
      for (int v : subset)
        if (std::find(k.begin(), k.end(), v) == k.end()) rest.push_back(v);
      for (auto& comp : weak_components(g, rest)) next.push_back(std::move(comp));
      plan.nodes.push_back(std::move(node));
    }
    ++level;
    pending = std::move(next);
  }
  for (const PartitionPlanNode& node : plan.nodes)
    plan.levels = std::max(plan.levels, node.level + 1);
  return plan;
}

Quasipartition evaluate_partition_plan(const WeightedDigraph& g, const PartitionPlan& plan,
                                       const DistMatrix& global_dist, double z) {
  std::vector<char> removed(g.edge_count(), 0);
  for (const PartitionPlanNode& node : plan.nodes) {
    for (int id : node.edge_ids) {
      if (removed[id]) continue;
      const int u = g.edge(id).tail, v = g.edge(id).head;
      for (int x : node.separator) {
        if ((global_dist.at(u, x) > z && global_dist.at(v, x) <= z) ||
            (global_dist.at(x, v) > z && global_dist.at(x, u) <= z)) {
          removed[id] = 1;
          break;
        }
      }
    }
  }
  return close_surviving_edges(g, removed);
}

Quasipartition sample_treewidth_quasipartition(const WeightedDigraph& g, double r,
                                               const SeparatorProvider& sep, double z) {
  if (!(r > 0.0) || !std::isfinite(r)) throw Error(Errc::invalid_input, "radius must be positive");
  if (!(z >= 0.0) || !(z <= r / 2.0)) throw Error(Errc::z_out_of_range, "z outside [0, r/2]");
  const PartitionPlan plan = build_partition_plan(g, sep);
  const DistMatrix dist = shortest_path_quasimetric(g);
  return evaluate_partition_plan(g, plan, dist, z);
}

WeightedSupport treewidth_quasipartition_support(const WeightedDigraph& g, double r,
                                                 const SeparatorProvider& sep) {
  if (!(r > 0.0) || !std::isfinite(r)) throw Error(Errc::invalid_input, "radius must be positive");
  const PartitionPlan plan = build_partition_plan(g, sep);
  const DistMatrix dist = shortest_path_quasimetric(g);
  const double zmax = r / 2.0;
  std::vector<double> breakpoints;
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const double d = dist.at(u, v);
      if (d > 0.0 && d < zmax) breakpoints.push_back(d);
    }
  return support_from_breakpoints(std::move(breakpoints), zmax, r, [&](double z) {
    return evaluate_partition_plan(g, plan, dist, z);
  });
}

WeightedDigraph epsilon_force_weights(const WeightedDigraph& g, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw Error(Errc::invalid_input, "radius must be positive");
  const double two_n = 2.0 * g.vertex_count();
  std::vector<double> w(g.edge_count());
  // weight <= r/(2n), tested multiplicatively so dyadic inputs stay exact
  for (int id = 0; id < g.edge_count(); ++id)
    w[id] = g.edge(id).weight * two_n <= r ? 0.0 : g.edge(id).weight;
  return g.with_weights(w);
}

WeightedSupport forced_support(const WeightedDigraph& g, double r, const SupportBuilder& build) {
  WeightedSupport s = build(epsilon_force_weights(g, r), r / 2.0);
  s.radius = r;
  return s;
}

SupportBuilder tree_support_builder(int root) {
  return [root](const WeightedDigraph& g, double r) {
    return tree_quasipartition_support(g, r, root);
  };
}

SupportBuilder treewidth_support_builder(SeparatorProvider sep) {
  return [sep = std::move(sep)](const WeightedDigraph& g, double r) {
    return treewidth_quasipartition_support(g, r, sep);
  };
}

}  // namespace quasicut
