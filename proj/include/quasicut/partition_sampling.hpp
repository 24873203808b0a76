#pragma once

#include <functional>
#include <vector>

#include "quasicut/digraph.hpp"
#include "quasicut/dist_matrix.hpp"
#include "quasicut/quasipartition.hpp"
#include "quasicut/separator.hpp"
#include "quasicut/support.hpp"

namespace quasicut {

// --- bidirected trees -------------------------------------------------
//
// One layered cut at offset z in [0, r/2]: a directed tree edge (u, v)
// is dropped when some threshold z + i*r/2 (integer i >= 0) separates
// the endpoint distances to the root (for edges walking toward it) or
// from the root (away from it). The transitive closure of the survivors
// is an r-bounded quasipartition, and over uniform z the probability a
// pair (u, v) separates is at most 2 d(u,v) / r.

Quasipartition sample_tree_quasipartition(const WeightedDigraph& tree, double r, int root,
                                          double z);

// Exact distribution over z ~ U[0, r/2]. The sampler's outcome is
// constant between consecutive breakpoints d(x,root) - i*r/2 and
// d(root,x) - i*r/2, so each open interval is evaluated at its
// midpoint and identical outcomes are merged in left-to-right order.
WeightedSupport tree_quasipartition_support(const WeightedDigraph& tree, double r, int root);

// --- bounded-treewidth digraphs ---------------------------------------
//
// One global offset z in [0, r/2] drives a recursive cut: at each level
// a balanced separator K of the current subgraph is chosen, every edge
// (u, v) of that subgraph with d(u,x) > z >= d(v,x) or
// d(x,v) > z >= d(x,u) for some x in K is dropped (distances always in
// the original graph), and the recursion descends into the weak
// components left by K. Closure of the survivors at the end.
//
// Separator choices do not depend on z, so the recursion is planned
// once and replayed per offset.

struct PartitionPlanNode {
  std::vector<int> subset;
  std::vector<int> separator;
  std::vector<int> edge_ids;  // edges of g inside subset
  int level = 0;
};

struct PartitionPlan {
  std::vector<PartitionPlanNode> nodes;
  int levels = 0;          // recursion depth over all branches
  int max_separator = 0;   // largest |K| encountered
};

PartitionPlan build_partition_plan(const WeightedDigraph& g, const SeparatorProvider& sep);

Quasipartition evaluate_partition_plan(const WeightedDigraph& g, const PartitionPlan& plan,
                                       const DistMatrix& global_dist, double z);

Quasipartition sample_treewidth_quasipartition(const WeightedDigraph& g, double r,
                                               const SeparatorProvider& sep, double z);

// Exact distribution over z ~ U[0, r/2]; breakpoints are the pairwise
// distances <= r/2, so the support has fewer than n^2 members.
WeightedSupport treewidth_quasipartition_support(const WeightedDigraph& g, double r,
                                                 const SeparatorProvider& sep);

// --- forcing transform -------------------------------------------------

// Zero out weights <= r / (2n); other weights unchanged.
WeightedDigraph epsilon_force_weights(const WeightedDigraph& g, double r);

// Builds a support for `g` at radius r in three steps: force small
// weights to zero, build at radius r/2 on the modified graph, re-tag
// with r. Doubles the Lipschitz constant, keeps the r-bound against
// the original metric, and relates every pair at distance <= r/(2n)
// with probability one.
using SupportBuilder = std::function<WeightedSupport(const WeightedDigraph&, double)>;

WeightedSupport forced_support(const WeightedDigraph& g, double r, const SupportBuilder& build);

SupportBuilder tree_support_builder(int root);
SupportBuilder treewidth_support_builder(SeparatorProvider sep);

}  // namespace quasicut
