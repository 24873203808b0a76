#pragma once

#include <limits>
#include <vector>

namespace quasicut {

// Unreachable pairs carry real infinity. IEEE infinity already gives
// absorbing addition and a total order over the extended reals, so it
// is the representation, never a large finite sentinel.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool finite_dist(double d) { return d < kInf; }

// Square matrix of extended non-negative reals with zero diagonal.
// Doubles as a quasimetric or a quasiultrametric depending on which
// triangle inequality it satisfies; use the validators below.
class DistMatrix {
 public:
  DistMatrix() = default;
  explicit DistMatrix(int n, double fill = kInf);

  int size() const { return n_; }
  double at(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }
  double& at(int i, int j) { return d_[static_cast<size_t>(i) * n_ + j]; }

  bool operator==(const DistMatrix& o) const = default;

 private:
  int n_ = 0;
  std::vector<double> d_;
};

using Quasimetric = DistMatrix;
using QuasiUltrametric = DistMatrix;

struct MetricCheck {
  enum class Kind { ok, diagonal, triangle };
  Kind kind = Kind::ok;
  // For triangle violations d(x,y) exceeds the detour through z;
  // for diagonal violations x == y == z is the offending point.
  int x = -1, y = -1, z = -1;

  bool ok() const { return kind == Kind::ok; }
};

// First violating triple in lexicographic (x, y, z) scan order, or ok.
MetricCheck validate_quasimetric(const DistMatrix& m);

// Same with the directed strong triangle inequality
// d(x,y) <= max(d(x,z), d(z,y)).
MetricCheck validate_quasiultrametric(const DistMatrix& m);

}  // namespace quasicut
