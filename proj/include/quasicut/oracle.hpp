#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "quasicut/cut.hpp"
#include "quasicut/support.hpp"

namespace quasicut {

// Ground-truth solvers and Monte Carlo cross-checks. These share no
// shortest-path or reachability code with the solvers they validate:
// reachability here is edge-list relaxation to a fixpoint.

inline constexpr int kOracleMaxEdges = 20;

// Minimum sparsity over all 2^|E| edge subsets that separate at least
// one demand pair; ties break by fewest edges, then lexicographic edge
// ids. Throws TooLarge above kOracleMaxEdges.
CutResult brute_force_sparsest_cut(const CutInstance& inst);

// Minimum capacity subset separating every pair, same tie-breaks.
CutResult brute_force_multicut(const CutInstance& inst);

// Vertices reachable from `source` once the listed edge ids are
// removed, by relaxing the raw edge list to a fixpoint.
std::vector<char> oracle_reachable(const WeightedDigraph& g,
                                   const std::vector<int>& removed_edges, int source);

struct RateEstimate {
  double rate = 0.0;
  double stderr_ = 0.0;  // binomial, sqrt(rate*(1-rate)/trials)
  int trials = 0;
};

// Fraction of `trials` draws of z uniform in [0, zmax) for which
// sample_at(z) leaves (u, v) unrelated. Requires trials >= 1000.
RateEstimate empirical_removal_rate(const std::function<Quasipartition(double)>& sample_at,
                                    double zmax, int u, int v, int trials,
                                    std::uint64_t seed);

struct PairRateRow {
  int u = 0, v = 0;
  double exact = 0.0;
  double empirical = 0.0;
  double sigma = 0.0;   // sqrt(exact*(1-exact)/trials); 0 when exact is 0 or 1
  double sigmas = 0.0;  // |empirical - exact| / sigma; 0 when both match exactly
  bool ok = false;      // within 3 sigma; exact match required when sigma is 0
};

struct EmpiricalReport {
  std::vector<PairRateRow> rows;
  int trials = 0;
  double max_sigmas = 0.0;
  bool all_ok = true;
};

// One pass of `trials` draws scored against the support's exact
// probabilities for every listed pair.
EmpiricalReport exact_vs_empirical_report(const WeightedSupport& support,
                                          const std::function<Quasipartition(double)>& sample_at,
                                          const std::vector<std::pair<int, int>>& pairs,
                                          int trials, std::uint64_t seed);

}  // namespace quasicut
