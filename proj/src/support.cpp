#include "quasicut/support.hpp"

#include <cmath>

namespace quasicut {

double WeightedSupport::total_weight() const {
  double s = 0.0;
  for (const SupportItem& it : items) s += it.weight;
  return s;
}

double WeightedSupport::removal_probability(int u, int v) const {
  double p = 0.0;
  for (const SupportItem& it : items)
    if (!it.partition.related(u, v)) p += it.weight;
  return p;
}

double WeightedSupport::removal_measure(int u, int v) const {
  double m = 0.0;
  for (const SupportItem& it : items)
    if (!it.partition.related(u, v))
      for (const auto& [lo, hi] : it.z_intervals) m += hi - lo;
  return m;
}

int WeightedSupport::item_for_z(double z) const {
  for (int i = 0; i < static_cast<int>(items.size()); ++i)
    for (const auto& [lo, hi] : items[i].z_intervals)
      if (lo < z && z < hi) return i;
  return -1;
}

bool validate_support(const WeightedSupport& s, const DistMatrix& m) {
  if (std::abs(s.total_weight() - 1.0) > 1e-12) return false;
  for (const SupportItem& it : s.items) {
    if (!(it.weight > 0.0)) return false;
    if (!it.partition.is_reflexive() || !it.partition.is_transitive()) return false;
    if (!is_r_bounded(it.partition, m, s.radius)) return false;
  }
  return true;
}

double lipschitz_constant(const WeightedSupport& support, const DistMatrix& m, double r) {
  const int n = m.size();
  double best = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const double d = m.at(u, v);
      if (u == v || d <= 0.0 || !finite_dist(d)) continue;
      const double ratio = support.removal_probability(u, v) * r / d;
      if (ratio > best) best = ratio;
    }
  return best;
}

}  // namespace quasicut
