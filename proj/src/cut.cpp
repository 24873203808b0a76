#include "quasicut/cut.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "quasicut/errors.hpp"
#include "quasicut/graph_ops.hpp"
#include "quasicut/limits.hpp"

namespace quasicut {

void validate_cut_instance(const CutInstance& inst) {
  const int n = inst.graph.vertex_count();
  if (n > limits().lp_max_n)
    throw Error(Errc::too_large, "instance exceeds the LP size limit");
  if (inst.pairs.empty())
    throw Error(Errc::invalid_input, "at least one demand pair is required");
  for (const DemandPair& p : inst.pairs) {
    if (p.source < 0 || p.source >= n || p.sink < 0 || p.sink >= n)
      throw Error(Errc::bad_vertex_id, "demand pair endpoint out of range");
    if (p.source == p.sink)
      throw Error(Errc::same_endpoints, "demand pair with equal endpoints");
    if (!(p.demand > 0.0) || !std::isfinite(p.demand))
      throw Error(Errc::invalid_input, "demands must be positive and finite");
  }
}

int lp_edge_var(const CutInstance&, int edge_id) { return edge_id; }

int lp_dist_var(const CutInstance& inst, int u, int v) {
  const int n = inst.graph.vertex_count();
  return inst.graph.edge_count() + u * (n - 1) + (v - (v > u ? 1 : 0));
}

LinearProgram build_sparsest_cut_lp(const CutInstance& inst) {
  validate_cut_instance(inst);
  const int n = inst.graph.vertex_count();
  const int m = inst.graph.edge_count();
  const int nv = m + n * (n - 1);

  LinearProgram lp;
  lp.objective.assign(nv, 0.0);
  for (int e = 0; e < m; ++e) lp.objective[e] = inst.graph.edge(e).weight;

  for (int e = 0; e < m; ++e) {
    const Edge& ed = inst.graph.edge(e);
    LpRow row;
    row.coeffs.assign(nv, 0.0);
    row.coeffs[lp_dist_var(inst, ed.tail, ed.head)] = 1.0;
    row.coeffs[lp_edge_var(inst, e)] = -1.0;
    row.sense = RowSense::less_eq;
    row.rhs = 0.0;
    lp.rows.push_back(std::move(row));
  }
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      for (int v = 0; v < n; ++v) {
        if (u == v || u == w || w == v) continue;
        LpRow row;
        row.coeffs.assign(nv, 0.0);
        row.coeffs[lp_dist_var(inst, u, v)] = 1.0;
        row.coeffs[lp_dist_var(inst, u, w)] -= 1.0;
        row.coeffs[lp_dist_var(inst, w, v)] -= 1.0;
        row.sense = RowSense::less_eq;
        row.rhs = 0.0;
        lp.rows.push_back(std::move(row));
      }
  LpRow demand_row;
  demand_row.coeffs.assign(nv, 0.0);
  for (const DemandPair& p : inst.pairs)
    demand_row.coeffs[lp_dist_var(inst, p.source, p.sink)] += p.demand;
  demand_row.sense = RowSense::greater_eq;
  demand_row.rhs = 1.0;
  lp.rows.push_back(std::move(demand_row));
  return lp;
}

std::vector<double> lp_edge_lengths(const CutInstance& inst, const LpSolution& sol) {
  const int m = inst.graph.edge_count();
  if (static_cast<int>(sol.x.size()) < m)
    throw Error(Errc::internal, "LP solution narrower than the edge list");
  std::vector<double> len(m);
  for (int e = 0; e < m; ++e) len[e] = std::max(0.0, sol.x[e]);
  return len;
}

CutResult evaluate_cut(const CutInstance& inst, const std::vector<int>& cut_edges) {
  CutResult res;
  res.cut_edges = cut_edges;
  std::sort(res.cut_edges.begin(), res.cut_edges.end());
  res.cut_edges.erase(std::unique(res.cut_edges.begin(), res.cut_edges.end()),
                      res.cut_edges.end());
  for (int e : res.cut_edges) {
    if (e < 0 || e >= inst.graph.edge_count())
      throw Error(Errc::invalid_input, "cut edge id out of range");
    res.capacity += inst.graph.edge(e).weight;
  }
  for (int i = 0; i < static_cast<int>(inst.pairs.size()); ++i) {
    const DemandPair& p = inst.pairs[i];
    const std::vector<char> reach = reachable_from(inst.graph, p.source, res.cut_edges);
    if (!reach[p.sink]) {
      res.separated_pairs.push_back(i);
      res.separated_demand += p.demand;
    }
  }
  res.sparsity = res.separated_demand > 0.0 ? res.capacity / res.separated_demand
                                            : kInf;
  return res;
}

namespace {

struct Candidate {
  std::vector<int> edges;
  double capacity = 0.0;
  double demand = 0.0;
  std::vector<int> pairs;

  double sparsity() const { return capacity / demand; }

  // (sparsity, edge count, lexicographic edge ids).
  bool better_than(const Candidate& o) const {
    if (sparsity() != o.sparsity()) return sparsity() < o.sparsity();
    if (edges.size() != o.edges.size()) return edges.size() < o.edges.size();
    return edges < o.edges;
  }
};

Candidate candidate_from_partition(const CutInstance& inst, const Quasipartition& p) {
  Candidate c;
  for (int e = 0; e < inst.graph.edge_count(); ++e) {
    const Edge& ed = inst.graph.edge(e);
    if (!p.related(ed.tail, ed.head)) {
      c.edges.push_back(e);
      c.capacity += ed.weight;
    }
  }
  for (int i = 0; i < static_cast<int>(inst.pairs.size()); ++i)
    if (!p.related(inst.pairs[i].source, inst.pairs[i].sink)) {
      c.pairs.push_back(i);
      c.demand += inst.pairs[i].demand;
    }
  return c;
}

}  // namespace

CutResult round_sparsest_cut(const CutInstance& inst, const ConvexCombination01& phi) {
  if (phi.items.empty()) throw Error(Errc::internal, "empty combination");

  std::vector<Candidate> cands;
  cands.reserve(phi.items.size());
  int best_idx = -1;
  double avg_capacity = 0.0, avg_demand = 0.0;
  for (const ConvexCombination01::Item& item : phi.items) {
    cands.push_back(candidate_from_partition(inst, item.partition));
    const Candidate& c = cands.back();
    avg_capacity += item.coefficient * c.capacity;
    avg_demand += item.coefficient * c.demand;
    if (c.demand <= 0.0) continue;
    if (best_idx < 0 || c.better_than(cands[best_idx])) {
      best_idx = static_cast<int>(cands.size()) - 1;
    }
  }
  if (best_idx < 0)
    throw Error(Errc::no_separating_candidate, "no partition separates any demand pair");
  const Candidate* best = &cands[best_idx];

  // Mediant average over the combination; the minimum cannot exceed it.
  if (avg_demand > 0.0 &&
      best->sparsity() > (avg_capacity / avg_demand) * (1.0 + 1e-9) + 1e-12)
    throw Error(Errc::internal, "rounded sparsity exceeds the combination average");

  CutResult res;
  res.cut_edges = best->edges;
  res.capacity = best->capacity;
  res.separated_demand = best->demand;
  res.sparsity = best->sparsity();
  res.separated_pairs = best->pairs;
  res.candidate_count = static_cast<int>(cands.size());
  return res;
}

CutResult solve_sparsest_cut(const CutInstance& inst, const SupportBuilder& build) {
  validate_cut_instance(inst);

  // Pairs the empty cut already separates.
  CutResult empty = evaluate_cut(inst, {});
  if (!empty.separated_pairs.empty()) {
    empty.sparsity = 0.0;
    empty.lp_value = 0.0;
    empty.candidate_count = 1;
    return empty;
  }

  const LinearProgram lp = build_sparsest_cut_lp(inst);
  const LpSolution sol = solve_lp(lp);
  const std::vector<double> len = lp_edge_lengths(inst, sol);
  const WeightedDigraph gx = inst.graph.with_weights(len);

  const ScaleFamily fam = build_scale_family(gx, build);
  const ConvexCombination01 phi = embed_01_combination(fam);

  CutResult res = round_sparsest_cut(inst, phi);
  res.lp_value = sol.value;
  for (int u = 0; u < fam.n(); ++u)
    for (int v = 0; v < fam.n(); ++v) {
      const double d = fam.metric.at(u, v);
      if (u == v || !finite_dist(d) || d <= 0.0) continue;
      res.guarantee = std::max(
          res.guarantee, phi.normalizer * combination_distance(phi, u, v) / d);
    }
  return res;
}

MulticutResult solve_multicut(const WeightedDigraph& g,
                              const std::vector<std::pair<int, int>>& pairs,
                              const SupportBuilder& build) {
  if (pairs.empty()) throw Error(Errc::invalid_input, "at least one pair is required");

  std::vector<int> remaining(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) remaining[i] = static_cast<int>(i);

  MulticutResult res;
  std::set<int> cut_set;
  while (!remaining.empty()) {
    CutInstance sub;
    sub.graph = g;
    for (int idx : remaining)
      sub.pairs.push_back({pairs[idx].first, pairs[idx].second, 1.0});

    MulticutIteration it;
    it.remaining_before = remaining;
    it.cut = solve_sparsest_cut(sub, build);
    if (it.cut.separated_pairs.empty())
      throw Error(Errc::non_progress, "sparsest-cut round separated no pair");

    std::vector<int> next;
    std::vector<uint8_t> gone(remaining.size(), 0);
    for (int local : it.cut.separated_pairs) gone[local] = 1;
    for (size_t local = 0; local < remaining.size(); ++local)
      if (!gone[local]) next.push_back(remaining[local]);
    for (int e : it.cut.cut_edges) cut_set.insert(e);
    res.iterations.push_back(std::move(it));
    remaining = std::move(next);
  }

  res.cut_edges.assign(cut_set.begin(), cut_set.end());
  for (int e : res.cut_edges) res.capacity += g.edge(e).weight;
  return res;
}

}  // namespace quasicut
