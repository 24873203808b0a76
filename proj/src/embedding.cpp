#include "quasicut/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "quasicut/errors.hpp"
#include "quasicut/graph_ops.hpp"

namespace quasicut {

namespace {

// floor(log2(x)) for x > 0, robust at exact powers of two.
int ilog2(double x) {
  int e = static_cast<int>(std::floor(std::log2(x)));
  while (std::ldexp(1.0, e + 1) <= x) ++e;
  while (std::ldexp(1.0, e) > x) --e;
  return e;
}

}  // namespace

ScaleFamily build_scale_family(const WeightedDigraph& g, const SupportBuilder& build) {
  const DistMatrix raw = shortest_path_quasimetric(g);
  const int n = raw.size();
  double min_pos = kInf, max_fin = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const double d = raw.at(u, v);
      if (d > 0.0 && d < min_pos) min_pos = d;
      if (finite_dist(d) && d > max_fin) max_fin = d;
    }
  if (!finite_dist(min_pos))
    throw Error(Errc::degenerate_space, "all distances are zero or infinite");

  ScaleFamily fam;
  fam.scale_factor = 1.0 / min_pos;
  std::vector<double> w(g.edge_count());
  for (int id = 0; id < g.edge_count(); ++id) w[id] = g.edge(id).weight * fam.scale_factor;
  fam.graph = g.with_weights(w);
  fam.metric = shortest_path_quasimetric(fam.graph);
  double delta = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (finite_dist(fam.metric.at(u, v))) delta = std::max(delta, fam.metric.at(u, v));
  fam.delta = delta;

  const int top = std::max(0, ilog2(delta));
  for (int i = 0; i <= top; ++i) {
    Scale s;
    s.level = i;
    s.radius = std::ldexp(1.0, i);
    s.support = forced_support(fam.graph, s.radius, build);
    fam.scales.push_back(std::move(s));
  }
  return fam;
}

QuasiUltrametric embed_quasiultrametric(const ScaleFamily& fam, const std::vector<int>& choice) {
  const int levels = static_cast<int>(fam.scales.size());
  if (static_cast<int>(choice.size()) != levels)
    throw Error(Errc::scale_mismatch, "one support choice required per scale");
  for (int i = 0; i < levels; ++i)
    if (choice[i] < 0 || choice[i] >= static_cast<int>(fam.scales[i].support.items.size()))
      throw Error(Errc::scale_mismatch, "support choice out of range");

  const int n = fam.n();
  const double top = std::ldexp(1.0, levels);  // 2^(top_level + 1)
  QuasiUltrametric um(n, top);
  for (int i = levels - 1; i >= 0; --i) {
    const Quasipartition& p = fam.scales[i].support.items[choice[i]].partition;
    const double above = std::ldexp(1.0, i + 1);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && um.at(u, v) == above && p.related(u, v))
          um.at(u, v) = std::ldexp(1.0, i);
  }
  // Pairs at infinite source distance stay at infinity; otherwise a
  // large enough threshold would relate them and break the r-bound.
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !finite_dist(fam.metric.at(u, v))) um.at(u, v) = kInf;
  return um;
}

std::vector<int> draw_scale_choice(const ScaleFamily& fam, Rng& rng) {
  std::vector<int> choice;
  choice.reserve(fam.scales.size());
  for (const Scale& s : fam.scales) {
    const double x = rng.unit();
    double acc = 0.0;
    int pick = static_cast<int>(s.support.items.size()) - 1;
    for (int j = 0; j < static_cast<int>(s.support.items.size()); ++j) {
      acc += s.support.items[j].weight;
      if (x < acc) {
        pick = j;
        break;
      }
    }
    choice.push_back(pick);
  }
  return choice;
}

double expected_ultrametric_distance(const ScaleFamily& fam, int u, int v) {
  if (u == v) return 0.0;
  if (!finite_dist(fam.metric.at(u, v))) return kInf;
  const int levels = static_cast<int>(fam.scales.size());
  std::vector<double> p(levels);
  for (int i = 0; i < levels; ++i) p[i] = fam.scales[i].support.removal_probability(u, v);
  // E[d*] = 1 + sum_i 2^i * Pr[d* >= 2^(i+1)]
  double e = 1.0;
  for (int i = 0; i < levels; ++i) {
    double keep = 1.0;
    for (int j = i; j < levels; ++j) keep *= 1.0 - p[j];
    e += std::ldexp(1.0, i) * (1.0 - keep);
  }
  return e;
}

ConvexCombination01 embed_01_combination(const ScaleFamily& fam) {
  ConvexCombination01 phi;
  for (const Scale& s : fam.scales) phi.normalizer += std::ldexp(1.0, s.level + 1);
  std::map<Quasipartition, int> index;
  for (const Scale& s : fam.scales) {
    const double scale_coeff = std::ldexp(1.0, s.level + 1) / phi.normalizer;
    for (const SupportItem& it : s.support.items) {
      auto [pos, fresh] = index.try_emplace(it.partition, static_cast<int>(phi.items.size()));
      if (fresh) phi.items.push_back({it.partition, 0.0});
      phi.items[pos->second].coefficient += scale_coeff * it.weight;
    }
  }
  return phi;
}

double combination_distance(const ConvexCombination01& phi, int u, int v) {
  if (u == v) return 0.0;
  double d = 0.0;
  for (const auto& item : phi.items)
    if (!item.partition.related(u, v)) d += item.coefficient;
  return d;
}

Quasipartition quasiultrametric_to_quasipartition(const QuasiUltrametric& um, double r) {
  if (!(r >= 0.0)) throw Error(Errc::invalid_input, "threshold must be non-negative");
  const MetricCheck check = validate_quasiultrametric(um);
  if (!check.ok())
    throw Error(Errc::not_a_quasiultrametric, "input fails the strong triangle inequality");
  const int n = um.size();
  Quasipartition rel(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      rel.set(u, v, um.at(u, v) <= r);
  if (!rel.is_transitive())
    throw Error(Errc::internal, "threshold relation must be transitive without closure");
  return rel;
}

Distortion distortion(const DistMatrix& m, const DistMatrix& m2) {
  const int n = m.size();
  Distortion out;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const double a = m.at(u, v), b = m2.at(u, v);
      if (u == v || !(a > 0.0) || !finite_dist(a)) continue;
      out.max_contraction = std::max(out.max_contraction, a / b);
      out.max_expansion = std::max(out.max_expansion, b / a);
    }
  return out;
}

}  // namespace quasicut
