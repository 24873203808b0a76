#include "quasicut/quasipartition.hpp"

namespace quasicut {

bool Quasipartition::is_reflexive() const {
  for (int i = 0; i < n_; ++i)
    if (!related(i, i)) return false;
  return true;
}

bool Quasipartition::is_transitive() const {
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) {
      if (!related(u, v)) continue;
      for (int w = 0; w < n_; ++w)
        if (related(v, w) && !related(u, w)) return false;
    }
  return true;
}

int Quasipartition::pair_count() const {
  int c = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (related(u, v)) ++c;
  return c;
}

Quasipartition transitive_closure(const Quasipartition& rel) {
  const int n = rel.size();
  Quasipartition p = rel;
  for (int i = 0; i < n; ++i) p.set(i, i, true);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!p.related(i, k)) continue;
      for (int j = 0; j < n; ++j)
        if (p.related(k, j)) p.set(i, j, true);
    }
  return p;
}

bool is_r_bounded(const Quasipartition& p, const DistMatrix& m, double r) {
  const int n = p.size();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (p.related(u, v) && !(m.at(u, v) <= r)) return false;
  return true;
}

}  // namespace quasicut
