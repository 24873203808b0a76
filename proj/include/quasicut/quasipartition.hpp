#pragma once

#include <cstdint>
#include <vector>

#include "quasicut/dist_matrix.hpp"

namespace quasicut {

// Reflexive transitive relation on [0, n). The directed analogue of a
// partition: "related" is reachability inside the relation itself.
class Quasipartition {
 public:
  Quasipartition() = default;
  explicit Quasipartition(int n) : n_(n), rel_(static_cast<size_t>(n) * n, 0) {
    for (int i = 0; i < n; ++i) set(i, i, true);
  }

  static Quasipartition identity(int n) { return Quasipartition(n); }
  static Quasipartition full(int n) {
    Quasipartition p(n);
    std::fill(p.rel_.begin(), p.rel_.end(), 1);
    return p;
  }

  int size() const { return n_; }
  bool related(int u, int v) const { return rel_[static_cast<size_t>(u) * n_ + v] != 0; }
  void set(int u, int v, bool on) { rel_[static_cast<size_t>(u) * n_ + v] = on ? 1 : 0; }

  bool is_reflexive() const;
  bool is_transitive() const;

  // Number of related ordered pairs, diagonal included.
  int pair_count() const;

  bool operator==(const Quasipartition& o) const = default;
  // Lexicographic on the flattened relation; used for deterministic merges.
  bool operator<(const Quasipartition& o) const { return rel_ < o.rel_; }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> rel_;
};

// Smallest transitive reflexive superset.
Quasipartition transitive_closure(const Quasipartition& rel);

// Every related pair sits at distance <= r in m.
bool is_r_bounded(const Quasipartition& p, const DistMatrix& m, double r);

}  // namespace quasicut
