#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "quasicut/digraph.hpp"
#include "quasicut/tree_decomposition.hpp"

namespace quasicut {

// A vertex set K is a balanced separator of the induced subgraph on
// `subset` when every weakly-connected component of subset - K has at
// most |subset| / 2 vertices.
bool is_balanced_separator(const WeightedDigraph& g, const std::vector<int>& subset,
                           const std::vector<int>& k);

// Exhaustive search over candidate sets of size 1..t, smallest size
// first, lexicographic within a size. nullopt when none qualifies.
std::optional<std::vector<int>> balanced_separator_in(const WeightedDigraph& g,
                                                      const std::vector<int>& subset, int t);

std::optional<std::vector<int>> balanced_separator(const WeightedDigraph& g, int t);

// Centroid bag of the decomposition tree under vertex-count weighting,
// restricted to `subset`. The restriction of a valid decomposition
// stays valid on induced subgraphs, so a balanced bag always exists.
std::vector<int> separator_from_decomposition(const WeightedDigraph& g,
                                              const TreeDecomposition& td,
                                              const std::vector<int>& subset);

// Yields a balanced separator of the induced subgraph on a subset, or
// throws SeparatorFailure. Providers must be weight-independent: the
// recursion structure they induce is reused across reweightings.
using SeparatorProvider =
    std::function<std::vector<int>(const WeightedDigraph&, const std::vector<int>&)>;

SeparatorProvider exhaustive_separator_provider(int t);
SeparatorProvider decomposition_separator_provider(TreeDecomposition td);

}  // namespace quasicut
