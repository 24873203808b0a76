#pragma once

#include <utility>
#include <vector>

#include "quasicut/digraph.hpp"
#include "quasicut/dist_matrix.hpp"
#include "quasicut/embedding.hpp"
#include "quasicut/lp.hpp"
#include "quasicut/partition_sampling.hpp"

namespace quasicut {

struct DemandPair {
  int source = 0;
  int sink = 0;
  double demand = 1.0;
};

struct CutInstance {
  WeightedDigraph graph;
  std::vector<DemandPair> pairs;
};

// Throws on out-of-range endpoints, source == sink, demand <= 0, or an
// empty pair list.
void validate_cut_instance(const CutInstance& inst);

// Fractional relaxation. Variable layout: x(e) for each edge id, then
// d(u,v) for ordered pairs u != v in lexicographic order. Rows:
//   d(u,v) - x(e) <= 0           for each edge e = (u,v), in edge order
//   d(u,v) - d(u,w) - d(w,v) <= 0 for ordered triples, lexicographic
//   sum of demand(s,t) * d(s,t) >= 1
LinearProgram build_sparsest_cut_lp(const CutInstance& inst);

int lp_edge_var(const CutInstance& inst, int edge_id);
int lp_dist_var(const CutInstance& inst, int u, int v);

// Edge lengths x from an LP solution; the rounded quasimetric is the
// shortest-path closure of the graph under those lengths (negatives
// clamped to zero). It dominates the LP's d entrywise.
std::vector<double> lp_edge_lengths(const CutInstance& inst, const LpSolution& sol);

struct CutResult {
  std::vector<int> cut_edges;        // sorted edge ids
  double capacity = 0.0;
  double separated_demand = 0.0;
  double sparsity = 0.0;             // capacity / separated_demand
  std::vector<int> separated_pairs;  // indices into inst.pairs, sorted
  double lp_value = 0.0;
  int candidate_count = 0;
  // Measured expansion of the scaled 0-1 combination against the
  // reweighted quasimetric; sparsity <= guarantee * lp_value is the
  // rounding certificate. Zero when the embedding never ran (a demand
  // pair was disconnected outright).
  double guarantee = 0.0;
};

// Capacity, separated pairs (by reachability after removing the edge
// set), demand, and sparsity of an explicit edge set.
CutResult evaluate_cut(const CutInstance& inst, const std::vector<int>& cut_edges);

// Best candidate among the combination's partitions: for each item,
// cut the unrelated edges and count the unrelated demand pairs (the
// pairs separated are exactly those, since related pairs keep a path
// of related edges). Candidates separating nothing are skipped; ties
// break by fewest edges, then lexicographic edge ids. The winner's
// sparsity is checked against the combination's own mediant average.
CutResult round_sparsest_cut(const CutInstance& inst, const ConvexCombination01& phi);

// LP + embedding + rounding. Demand pairs with no directed path are
// handled first: the empty cut already separates them at sparsity 0.
// The builder turns the reweighted graph into per-scale supports.
CutResult solve_sparsest_cut(const CutInstance& inst, const SupportBuilder& build);

struct MulticutIteration {
  CutResult cut;  // separated_pairs indexes the *remaining* pair list
  std::vector<int> remaining_before;  // global pair indices
};

struct MulticutResult {
  std::vector<int> cut_edges;  // union, sorted
  double capacity = 0.0;
  std::vector<MulticutIteration> iterations;
};

// Repeated sparsest cut on the full graph with unit demands on the
// still-connected pairs; each round's cut edges accumulate and the
// pairs it separates leave the demand list. Throws NonProgress if a
// round separates nothing (cannot happen for rounded candidates).
MulticutResult solve_multicut(const WeightedDigraph& g,
                              const std::vector<std::pair<int, int>>& pairs,
                              const SupportBuilder& build);

}  // namespace quasicut
