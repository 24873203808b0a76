#include "quasicut/corpus.hpp"

#include <algorithm>
#include <set>

#include "quasicut/errors.hpp"
#include "quasicut/partition_sampling.hpp"
#include "quasicut/separator.hpp"

namespace quasicut {

WeightedDigraph random_bidirected_tree(int n, Rng& rng, int max_weight,
                                       bool force_unit_edge) {
  if (n < 2) throw Error(Errc::invalid_input, "tree corpus needs n >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    const int u = rng.below(v);
    edges.push_back({u, v, static_cast<double>(rng.range(1, max_weight))});
    edges.push_back({v, u, static_cast<double>(rng.range(1, max_weight))});
  }
  if (force_unit_edge) edges[0].weight = 1.0;
  return WeightedDigraph(n, std::move(edges));
}

namespace {

struct SkeletonEdge {
  int a = 0, b = 0;  // a < b
  int bag = 0;       // bag that introduced the pair
};

// One candidate orientation of a random 2-tree skeleton; the caller
// rejects candidates whose separator recursion cannot stay at size 2.
TreewidthInstance treewidth_candidate(int n, Rng& rng, int max_weight,
                                      int* first_edge_id) {
  TreewidthInstance out;
  std::vector<SkeletonEdge> skeleton{{0, 1, 0}};
  out.decomposition.bags.push_back({0, 1});
  for (int v = 2; v < n; ++v) {
    const SkeletonEdge base = skeleton[rng.below(static_cast<int>(skeleton.size()))];
    const int bag = static_cast<int>(out.decomposition.bags.size());
    out.decomposition.bags.push_back({base.a, base.b, v});
    out.decomposition.tree_edges.emplace_back(base.bag, bag);
    skeleton.push_back({std::min(base.a, v), std::max(base.a, v), bag});
    skeleton.push_back({std::min(base.b, v), std::max(base.b, v), bag});
  }

  *first_edge_id = -1;
  std::vector<Edge> edges;
  for (const SkeletonEdge& se : skeleton) {
    // both 50%, one direction 20% each, absent 10%
    const int roll = rng.below(10);
    const bool fwd = roll < 7;
    const bool bwd = roll < 5 || (roll >= 7 && roll < 9);
    if (fwd) edges.push_back({se.a, se.b, static_cast<double>(rng.range(1, max_weight))});
    if (bwd) edges.push_back({se.b, se.a, static_cast<double>(rng.range(1, max_weight))});
  }
  out.graph = WeightedDigraph(n, std::move(edges));
  if (out.graph.edge_count() > 0) *first_edge_id = 0;
  return out;
}

bool plan_succeeds(const WeightedDigraph& g) {
  try {
    build_partition_plan(g, exhaustive_separator_provider(2));
    return true;
  } catch (const Error& e) {
    if (e.code == Errc::separator_failure) return false;
    throw;
  }
}

}  // namespace

TreewidthInstance random_treewidth_graph(int n, Rng& rng, int max_weight,
                                         bool force_unit_edge) {
  if (n < 2) throw Error(Errc::invalid_input, "treewidth corpus needs n >= 2");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    int first_edge = -1;
    TreewidthInstance cand = treewidth_candidate(n, rng, max_weight, &first_edge);
    if (force_unit_edge) {
      if (first_edge < 0) continue;
      std::vector<double> w;
      for (const Edge& e : cand.graph.edges()) w.push_back(e.weight);
      w[first_edge] = 1.0;
      cand.graph = cand.graph.with_weights(w);
    }
    if (!plan_succeeds(cand.graph)) continue;
    cand.decomposition.validate(cand.graph);
    return cand;
  }
  throw Error(Errc::internal, "treewidth generator failed to produce a usable instance");
}

CutCorpusInstance random_cut_instance(int n, int max_pairs, int max_edges, Rng& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    int first_edge = -1;
    TreewidthInstance base = treewidth_candidate(n, rng, 8, &first_edge);
    if (base.graph.edge_count() == 0) continue;
    if (base.graph.edge_count() > max_edges) {
      std::vector<Edge> trimmed(base.graph.edges().begin(),
                                base.graph.edges().begin() + max_edges);
      base.graph = WeightedDigraph(n, std::move(trimmed));
    }
    if (!plan_succeeds(base.graph)) continue;
    base.decomposition.validate(base.graph);

    CutCorpusInstance inst;
    inst.graph = std::move(base.graph);
    inst.decomposition = std::move(base.decomposition);
    const int want = rng.range(1, max_pairs);
    std::set<std::pair<int, int>> used;
    for (int tries = 0; tries < 100 && static_cast<int>(inst.pairs.size()) < want; ++tries) {
      const int s = rng.below(n);
      const int t = rng.below(n);
      if (s == t || used.count({s, t})) continue;
      used.insert({s, t});
      inst.pairs.push_back({s, t, 1.0});
    }
    if (inst.pairs.empty()) continue;
    return inst;
  }
  throw Error(Errc::internal, "cut-instance generator failed to produce a usable instance");
}

std::vector<WeightedDigraph> corpus_trees(int count, int max_n, std::uint64_t seed,
                                          bool force_unit_edge) {
  Rng rng(seed);
  std::vector<WeightedDigraph> out;
  for (int i = 0; i < count; ++i)
    out.push_back(random_bidirected_tree(rng.range(2, max_n), rng, 8, force_unit_edge));
  return out;
}

std::vector<TreewidthInstance> corpus_treewidth(int count, int max_n, std::uint64_t seed,
                                                bool force_unit_edge) {
  Rng rng(seed);
  std::vector<TreewidthInstance> out;
  for (int i = 0; i < count; ++i)
    out.push_back(random_treewidth_graph(rng.range(3, max_n), rng, 8, force_unit_edge));
  return out;
}

std::vector<CutCorpusInstance> corpus_cut_instances(int count, int max_n,
                                                    std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CutCorpusInstance> out;
  for (int i = 0; i < count; ++i)
    out.push_back(random_cut_instance(rng.range(3, max_n), 4, 14, rng));
  return out;
}

}  // namespace quasicut
