#pragma once

#include <vector>

#include "quasicut/digraph.hpp"
#include "quasicut/dist_matrix.hpp"
#include "quasicut/partition_sampling.hpp"
#include "quasicut/quasipartition.hpp"
#include "quasicut/rng.hpp"
#include "quasicut/support.hpp"

namespace quasicut {

// One forced support per scale radius 2^level.
struct Scale {
  int level = 0;
  double radius = 0.0;
  WeightedSupport support;
};

// Distances rescaled so the smallest positive finite one is 1;
// scale_factor maps original units to rescaled ones (multiply), and
// back (divide). delta is the rescaled finite diameter.
struct ScaleFamily {
  std::vector<Scale> scales;
  WeightedDigraph graph;  // rescaled weights
  DistMatrix metric;      // its shortest-path quasimetric
  double scale_factor = 1.0;
  double delta = 0.0;

  int n() const { return metric.size(); }
  int top_level() const { return static_cast<int>(scales.size()) - 1; }
};

// Throws DegenerateSpace when no positive finite distance exists.
ScaleFamily build_scale_family(const WeightedDigraph& g, const SupportBuilder& build);

// Quasiultrametric from one support choice per scale: start every
// off-diagonal pair at 2^(top+1) and walk the scales downward, halving
// a pair's value whenever the chosen partition relates it at the scale
// just below its current value. Pairs at infinite source distance stay
// infinite. Output distances are in rescaled units.
QuasiUltrametric embed_quasiultrametric(const ScaleFamily& fam, const std::vector<int>& choice);

// Independent per-scale draws by support weight, ascending scale order.
std::vector<int> draw_scale_choice(const ScaleFamily& fam, Rng& rng);

// Exact E[d*(u,v)] over independent per-scale draws, computed from the
// per-scale marginals p_i = Pr[(u,v) unrelated at scale i] via
// Pr[d* >= 2^(i+1)] = 1 - prod_{j>=i} (1 - p_j).
double expected_ultrametric_distance(const ScaleFamily& fam, int u, int v);

// 0-1 quasimetrics (one per distinct partition across all scales) with
// convex coefficients (2^(i+1)/c) * weight, c = sum of 2^(i+1).
struct ConvexCombination01 {
  struct Item {
    Quasipartition partition;  // d_j(u,v) = 0 iff related
    double coefficient = 0.0;
  };
  std::vector<Item> items;
  double normalizer = 0.0;  // c

  int n() const { return items.empty() ? 0 : items.front().partition.size(); }
};

ConvexCombination01 embed_01_combination(const ScaleFamily& fam);

double combination_distance(const ConvexCombination01& phi, int u, int v);

// Threshold relation {(u,v) : d*(u,v) <= r}. Transitivity follows from
// the strong triangle inequality and is asserted, not reinstated by
// closure. Throws NotAQuasiUltrametric if the input fails validation.
Quasipartition quasiultrametric_to_quasipartition(const QuasiUltrametric& um, double r);

struct Distortion {
  double max_contraction = 1.0;  // max over pairs of d/d2, clamped at 1
  double max_expansion = 1.0;    // max over pairs of d2/d, clamped at 1
};

// Pairs with 0 < d < inf in both matrices.
Distortion distortion(const DistMatrix& m, const DistMatrix& m2);

}  // namespace quasicut
