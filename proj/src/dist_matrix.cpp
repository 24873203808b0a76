#include "quasicut/dist_matrix.hpp"

#include <algorithm>

#include "quasicut/errors.hpp"

namespace quasicut {

DistMatrix::DistMatrix(int n, double fill) : n_(n) {
  if (n < 0) throw Error(Errc::invalid_input, "negative matrix size");
  d_.assign(static_cast<size_t>(n) * n, fill);
  for (int i = 0; i < n; ++i) at(i, i) = 0.0;
}

template <typename Detour>
static MetricCheck validate_with(const DistMatrix& m, Detour detour) {
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    if (m.at(i, i) != 0.0) return {MetricCheck::Kind::diagonal, i, i, i};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (m.at(x, y) > detour(m.at(x, z), m.at(z, y)))
          return {MetricCheck::Kind::triangle, x, y, z};
      }
    }
  return {};
}

MetricCheck validate_quasimetric(const DistMatrix& m) {
  return validate_with(m, [](double a, double b) { return a + b; });
}

MetricCheck validate_quasiultrametric(const DistMatrix& m) {
  return validate_with(m, [](double a, double b) { return std::max(a, b); });
}

}  // namespace quasicut
