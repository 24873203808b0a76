#pragma once

#include <cstdint>
#include <vector>

#include "quasicut/cut.hpp"
#include "quasicut/digraph.hpp"
#include "quasicut/rng.hpp"
#include "quasicut/tree_decomposition.hpp"

namespace quasicut {

// Seeded instance generators behind the acceptance corpora. Integer
// weights keep every downstream interval-measure comparison exact.

// Random bidirected tree; each direction of each tree edge weighs
// U{1..max_weight}. With force_unit_edge the first edge weighs 1, so
// the minimum positive distance (and thus the embedding scale factor)
// is exactly 1.
WeightedDigraph random_bidirected_tree(int n, Rng& rng, int max_weight = 8,
                                       bool force_unit_edge = false);

struct TreewidthInstance {
  WeightedDigraph graph;
  TreeDecomposition decomposition;  // width <= 2 by construction
};

// Random orientation of a random partial 2-tree. Rejection-sampled so
// the exhaustive size-2 balanced-separator recursion succeeds on every
// level (bags guarantee size-3 separators; size 2 is what the sampler's
// Lipschitz constant is stated for).
TreewidthInstance random_treewidth_graph(int n, Rng& rng, int max_weight = 8,
                                         bool force_unit_edge = false);

struct CutCorpusInstance {
  WeightedDigraph graph;  // at most max_edges directed edges
  TreeDecomposition decomposition;
  std::vector<DemandPair> pairs;  // unit demands
};

CutCorpusInstance random_cut_instance(int n, int max_pairs, int max_edges, Rng& rng);

// Fixed corpora: n drawn uniformly from [2, max_n] (trees) or
// [3, max_n] (treewidth), one shared generator state per corpus.
std::vector<WeightedDigraph> corpus_trees(int count, int max_n, std::uint64_t seed,
                                          bool force_unit_edge = false);
std::vector<TreewidthInstance> corpus_treewidth(int count, int max_n, std::uint64_t seed,
                                                bool force_unit_edge = false);
std::vector<CutCorpusInstance> corpus_cut_instances(int count, int max_n,
                                                    std::uint64_t seed);

}  // namespace quasicut
