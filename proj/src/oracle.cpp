#include "quasicut/oracle.hpp"

#include <cmath>

#include "quasicut/errors.hpp"
#include "quasicut/rng.hpp"

namespace quasicut {

namespace {

// Independent reachability: sweep the raw edge list to a fixpoint.
std::vector<uint8_t> relax_reach(int n, const std::vector<Edge>& edges,
                                 uint32_t removed_mask, int s) {
  std::vector<uint8_t> in(n, 0);
  in[s] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t e = 0; e < edges.size(); ++e) {
      if ((removed_mask >> e) & 1u) continue;
      if (in[edges[e].tail] && !in[edges[e].head]) {
        in[edges[e].head] = 1;
        changed = true;
      }
    }
  }
  return in;
}

struct Enumerated {
  double capacity = 0.0;
  std::vector<int> edges;
  std::vector<int> pairs;
  double demand = 0.0;
};

Enumerated describe(const CutInstance& inst, uint32_t mask) {
  Enumerated out;
  for (int e = 0; e < inst.graph.edge_count(); ++e)
    if ((mask >> e) & 1u) {
      out.edges.push_back(e);
      out.capacity += inst.graph.edge(e).weight;
    }
  for (int i = 0; i < static_cast<int>(inst.pairs.size()); ++i) {
    const DemandPair& p = inst.pairs[i];
    if (!relax_reach(inst.graph.vertex_count(), inst.graph.edges(), mask, p.source)[p.sink]) {
      out.pairs.push_back(i);
      out.demand += p.demand;
    }
  }
  return out;
}

// (key, fewest edges, lexicographic edge ids).
bool improves(double key, const Enumerated& cand, double best_key,
              const Enumerated& best, bool have_best) {
  if (!have_best) return true;
  if (key != best_key) return key < best_key;
  if (cand.edges.size() != best.edges.size()) return cand.edges.size() < best.edges.size();
  return cand.edges < best.edges;
}

CutResult to_result(const Enumerated& e) {
  CutResult res;
  res.cut_edges = e.edges;
  res.capacity = e.capacity;
  res.separated_pairs = e.pairs;
  res.separated_demand = e.demand;
  res.sparsity = e.demand > 0.0 ? e.capacity / e.demand : kInf;
  return res;
}

void check_enumeration_size(const CutInstance& inst) {
  validate_cut_instance(inst);
  if (inst.graph.edge_count() > kOracleMaxEdges)
    throw Error(Errc::too_large, "brute force is capped at 20 edges");
}

}  // namespace

CutResult brute_force_sparsest_cut(const CutInstance& inst) {
  check_enumeration_size(inst);
  const uint32_t total = 1u << inst.graph.edge_count();
  Enumerated best;
  double best_key = 0.0;
  bool have_best = false;
  for (uint32_t mask = 0; mask < total; ++mask) {
    Enumerated cand = describe(inst, mask);
    if (cand.demand <= 0.0) continue;
    const double key = cand.capacity / cand.demand;
    if (improves(key, cand, best_key, best, have_best)) {
      best = std::move(cand);
      best_key = key;
      have_best = true;
    }
  }
  if (!have_best)
    throw Error(Errc::internal, "full edge set fails to separate any pair");
  return to_result(best);
}

CutResult brute_force_multicut(const CutInstance& inst) {
  check_enumeration_size(inst);
  const uint32_t total = 1u << inst.graph.edge_count();
  Enumerated best;
  double best_key = 0.0;
  bool have_best = false;
  for (uint32_t mask = 0; mask < total; ++mask) {
    Enumerated cand = describe(inst, mask);
    if (cand.pairs.size() != inst.pairs.size()) continue;
    if (improves(cand.capacity, cand, best_key, best, have_best)) {
      best_key = cand.capacity;
      best = std::move(cand);
      have_best = true;
    }
  }
  if (!have_best)
    throw Error(Errc::internal, "full edge set fails to separate every pair");
  return to_result(best);
}

std::vector<char> oracle_reachable(const WeightedDigraph& g,
                                   const std::vector<int>& removed_edges, int source) {
  std::vector<char> removed(g.edge_count(), 0);
  for (int id : removed_edges) removed[id] = 1;
  std::vector<char> in(g.vertex_count(), 0);
  in[source] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int id = 0; id < g.edge_count(); ++id) {
      if (removed[id]) continue;
      const Edge& e = g.edge(id);
      if (in[e.tail] && !in[e.head]) {
        in[e.head] = 1;
        changed = true;
      }
    }
  }
  return in;
}

RateEstimate empirical_removal_rate(const std::function<Quasipartition(double)>& sample_at,
                                    double zmax, int u, int v, int trials,
                                    std::uint64_t seed) {
  if (trials < 1000) throw Error(Errc::invalid_input, "at least 1000 trials required");
  Rng rng(seed);
  int removed = 0;
  for (int i = 0; i < trials; ++i)
    if (!sample_at(rng.uniform(zmax)).related(u, v)) ++removed;
  RateEstimate est;
  est.trials = trials;
  est.rate = static_cast<double>(removed) / trials;
  est.stderr_ = std::sqrt(est.rate * (1.0 - est.rate) / trials);
  return est;
}

EmpiricalReport exact_vs_empirical_report(const WeightedSupport& support,
                                          const std::function<Quasipartition(double)>& sample_at,
                                          const std::vector<std::pair<int, int>>& pairs,
                                          int trials, std::uint64_t seed) {
  if (trials < 1000) throw Error(Errc::invalid_input, "at least 1000 trials required");
  Rng rng(seed);
  std::vector<int> removed(pairs.size(), 0);
  for (int i = 0; i < trials; ++i) {
    const Quasipartition p = sample_at(rng.uniform(support.zmax));
    for (size_t k = 0; k < pairs.size(); ++k)
      if (!p.related(pairs[k].first, pairs[k].second)) ++removed[k];
  }

  EmpiricalReport rep;
  rep.trials = trials;
  for (size_t k = 0; k < pairs.size(); ++k) {
    PairRateRow row;
    row.u = pairs[k].first;
    row.v = pairs[k].second;
    row.exact = support.removal_probability(row.u, row.v);
    row.empirical = static_cast<double>(removed[k]) / trials;
    row.sigma = std::sqrt(row.exact * (1.0 - row.exact) / trials);
    const double diff = std::abs(row.empirical - row.exact);
    if (row.sigma > 0.0) {
      row.sigmas = diff / row.sigma;
      row.ok = row.sigmas <= 3.0;
    } else {
      row.sigmas = diff == 0.0 ? 0.0 : kInf;
      row.ok = diff == 0.0;
    }
    rep.max_sigmas = std::max(rep.max_sigmas, row.sigmas);
    rep.all_ok = rep.all_ok && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace quasicut
