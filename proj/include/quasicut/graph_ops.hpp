#pragma once

#include <vector>

#include "quasicut/digraph.hpp"
#include "quasicut/dist_matrix.hpp"

namespace quasicut {

// All-pairs shortest-path quasimetric by cubic relaxation.
// Throws TooLarge above the configured vertex cap.
DistMatrix shortest_path_quasimetric(const WeightedDigraph& g);

// Every edge has its reverse and the underlying undirected graph is a
// tree (connected, acyclic). Weights in the two directions may differ.
bool is_bidirected_tree(const WeightedDigraph& g);

bool is_dag(const WeightedDigraph& g);

// Replace every edge (u, v) of a DAG by a 3-edge path
// u -> x -> y -> v, each of weight w/3. The two new vertices for
// input edge k are n + 2k and n + 2k + 1. Throws NotADag otherwise.
WeightedDigraph subdivide_three(const WeightedDigraph& g);

// Weakly-connected components of the induced subgraph on `subset`,
// each sorted ascending, ordered by smallest member.
std::vector<std::vector<int>> weak_components(const WeightedDigraph& g,
                                              const std::vector<int>& subset);

// Vertices reachable from s along edges whose id is not in
// `removed_edges` (sorted or not; treated as a set).
std::vector<char> reachable_from(const WeightedDigraph& g, int s,
                                 const std::vector<int>& removed_edges = {});

}  // namespace quasicut
