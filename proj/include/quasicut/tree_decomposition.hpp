#pragma once

#include <utility>
#include <vector>

#include "quasicut/digraph.hpp"

namespace quasicut {

// Bags of vertices arranged in a tree. Valid for a digraph when every
// vertex and every edge's endpoint pair appear together in some bag
// and each vertex's bags form a connected subtree.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> tree_edges;

  int width() const;

  // Throws InvalidDecomposition with a reason if any condition fails.
  void validate(const WeightedDigraph& g) const;
};

}  // namespace quasicut
