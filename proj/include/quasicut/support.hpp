#pragma once

#include <utility>
#include <vector>

#include "quasicut/quasipartition.hpp"

namespace quasicut {

// One outcome of a derandomized sampler: the quasipartition, its total
// probability, and the z-intervals of [0, zmax] that produce it.
struct SupportItem {
  Quasipartition partition;
  double weight = 0.0;
  std::vector<std::pair<double, double>> z_intervals;
};

// Exact finite distribution over quasipartitions, tagged with the
// radius r whose bound every member satisfies. zmax is the length of
// the z-range the intervals partition (r/2 for the plain samplers,
// r/4 after the forcing transform).
struct WeightedSupport {
  std::vector<SupportItem> items;
  double radius = 0.0;
  double zmax = 0.0;

  double total_weight() const;

  // Pr[(u, v) not related] under the distribution.
  double removal_probability(int u, int v) const;

  // Same numerator in z-measure units: sum of interval lengths over
  // items that do not relate (u, v). Equals removal_probability * zmax
  // but avoids the division, so it stays exact on dyadic inputs.
  double removal_measure(int u, int v) const;

  // Index of the item whose z-interval strictly contains z, or -1.
  int item_for_z(double z) const;
};

// Weights sum to 1 within 1e-12 and every member is r-bounded in m.
bool validate_support(const WeightedSupport& s, const DistMatrix& m);

// Largest removal_probability(u,v) * r / d(u,v) over ordered pairs
// with 0 < d < inf.
double lipschitz_constant(const WeightedSupport& support, const DistMatrix& m, double r);

}  // namespace quasicut
