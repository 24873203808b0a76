#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "quasicut/corpus.hpp"
#include "quasicut/embedding.hpp"
#include "quasicut/errors.hpp"
#include "quasicut/graph_ops.hpp"
#include "quasicut/partition_sampling.hpp"
#include "quasicut/rng.hpp"
#include "quasicut/separator.hpp"

using namespace quasicut;

namespace {

WeightedDigraph bidirected(int n, const std::vector<std::pair<int, int>>& und, double w = 1.0) {
  std::vector<Edge> edges;
  for (auto [a, b] : und) {
    edges.push_back({a, b, w});
    edges.push_back({b, a, w});
  }
  return {n, std::move(edges)};
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code;
  }
  return Errc::internal;
}

}  // namespace

TEST_CASE("scale family on the 2-node unit tree") {
  const WeightedDigraph t = bidirected(2, {{0, 1}});
  const ScaleFamily fam = build_scale_family(t, tree_support_builder(0));
  CHECK(fam.scale_factor == 1.0);
  CHECK(fam.delta == 1.0);
  REQUIRE(fam.scales.size() == 1);
  CHECK(fam.scales[0].radius == 1.0);
  CHECK(fam.scales[0].support.zmax == 0.25);

  // d = 1 exceeds the scale-1 support's r/2 bound, so the pair is
  // unrelated in every item and d* = 2 deterministically.
  for (const SupportItem& it : fam.scales[0].support.items) {
    CHECK_FALSE(it.partition.related(0, 1));
    CHECK_FALSE(it.partition.related(1, 0));
  }
  const QuasiUltrametric um = embed_quasiultrametric(fam, {0});
  CHECK(um.at(0, 1) == 2.0);
  CHECK(um.at(1, 0) == 2.0);
  CHECK(expected_ultrametric_distance(fam, 0, 1) == 2.0);

  const ConvexCombination01 phi = embed_01_combination(fam);
  CHECK(phi.normalizer == 2.0);
  double coeff = 0.0;
  for (const auto& item : phi.items) coeff += item.coefficient;
  CHECK(std::abs(coeff - 1.0) <= 1e-12);
  CHECK(phi.normalizer * combination_distance(phi, 0, 1) == 2.0);
}

TEST_CASE("scale families rescale so the smallest distance is 1") {
  const WeightedDigraph t = bidirected(2, {{0, 1}}, 0.25);
  const ScaleFamily fam = build_scale_family(t, tree_support_builder(0));
  CHECK(fam.scale_factor == 4.0);
  CHECK(fam.metric.at(0, 1) == 1.0);

  const WeightedDigraph empty(3, {});
  CHECK(code_of([&] { build_scale_family(empty, tree_support_builder(0)); }) ==
        Errc::degenerate_space);
}

TEST_CASE("embeddings dominate the metric and satisfy the strong triangle") {
  const auto trees = corpus_trees(15, 10, 1234, true);
  Rng rng(5);
  for (const WeightedDigraph& t : trees) {
    const ScaleFamily fam = build_scale_family(t, tree_support_builder(0));
    const int n = fam.n();
    for (int k = 0; k < 3; ++k) {
      const QuasiUltrametric um = embed_quasiultrametric(fam, draw_scale_choice(fam, rng));
      CHECK(validate_quasiultrametric(um).ok());
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (finite_dist(fam.metric.at(u, v))) CHECK(um.at(u, v) >= fam.metric.at(u, v));
    }
  }
}

TEST_CASE("treewidth embeddings keep unreachable pairs at infinity") {
  const auto instances = corpus_treewidth(10, 7, 4321, true);
  Rng rng(6);
  const SeparatorProvider sep = exhaustive_separator_provider(2);
  for (const TreewidthInstance& ti : instances) {
    const ScaleFamily fam = build_scale_family(ti.graph, treewidth_support_builder(sep));
    const QuasiUltrametric um = embed_quasiultrametric(fam, draw_scale_choice(fam, rng));
    CHECK(validate_quasiultrametric(um).ok());
    const int n = fam.n();
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        if (finite_dist(fam.metric.at(u, v)))
          CHECK(um.at(u, v) >= fam.metric.at(u, v));
        else
          CHECK(um.at(u, v) == kInf);
      }
  }
}

TEST_CASE("expected distance matches a direct Monte Carlo average") {
  const WeightedDigraph t = bidirected(4, {{0, 1}, {1, 2}, {1, 3}}, 2.0);
  const ScaleFamily fam = build_scale_family(t, tree_support_builder(0));
  const int n = fam.n();
  const int trials = 20000;
  Rng rng(77);
  std::vector<double> sum(static_cast<size_t>(n) * n, 0.0);
  for (int k = 0; k < trials; ++k) {
    const QuasiUltrametric um = embed_quasiultrametric(fam, draw_scale_choice(fam, rng));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) sum[static_cast<size_t>(u) * n + v] += um.at(u, v);
  }
  const double top = std::ldexp(1.0, fam.top_level() + 1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const double expect = expected_ultrametric_distance(fam, u, v);
      const double mean = sum[static_cast<size_t>(u) * n + v] / trials;
      // Cheap conservative bound: |d*| <= top, so sigma <= top/2.
      CHECK(std::abs(mean - expect) <= 3.0 * (top / 2.0) / std::sqrt(double(trials)) + 1e-12);
    }
}

TEST_CASE("scale choices out of range are rejected") {
  const WeightedDigraph t = bidirected(2, {{0, 1}});
  const ScaleFamily fam = build_scale_family(t, tree_support_builder(0));
  CHECK(code_of([&] { embed_quasiultrametric(fam, {}); }) == Errc::scale_mismatch);
  CHECK(code_of([&] { embed_quasiultrametric(fam, {99}); }) == Errc::scale_mismatch);
}

TEST_CASE("thresholding is transitive without closure and r-bounded") {
  const auto trees = corpus_trees(10, 9, 2468, true);
  Rng rng(9);
  for (const WeightedDigraph& t : trees) {
    const ScaleFamily fam = build_scale_family(t, tree_support_builder(0));
    const QuasiUltrametric um = embed_quasiultrametric(fam, draw_scale_choice(fam, rng));
    const int n = fam.n();
    for (double r : {0.0, 1.0, 1.5, 2.0, 4.0, 1024.0}) {
      const Quasipartition p = quasiultrametric_to_quasipartition(um, r);
      CHECK(p.is_transitive());
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (p.related(u, v)) CHECK(fam.metric.at(u, v) <= r);
    }
  }

  DistMatrix bad(3, 0.0);
  bad.at(0, 1) = 1.0;
  bad.at(1, 2) = 1.0;
  bad.at(0, 2) = 2.0;  // violates the strong triangle
  CHECK(code_of([&] { quasiultrametric_to_quasipartition(bad, 1.0); }) ==
        Errc::not_a_quasiultrametric);
}

TEST_CASE("0-1 combinations are convex and dominate the metric when scaled") {
  const auto instances = corpus_treewidth(8, 7, 1357, true);
  const SeparatorProvider sep = exhaustive_separator_provider(2);
  for (const TreewidthInstance& ti : instances) {
    const ScaleFamily fam = build_scale_family(ti.graph, treewidth_support_builder(sep));
    const ConvexCombination01 phi = embed_01_combination(fam);
    double coeff = 0.0;
    for (const auto& item : phi.items) {
      CHECK(item.coefficient > 0.0);
      CHECK(item.partition.is_transitive());
      coeff += item.coefficient;
    }
    CHECK(std::abs(coeff - 1.0) <= 1e-12);

    const int n = fam.n();
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        const double d = fam.metric.at(u, v);
        if (u == v || !finite_dist(d) || d <= 0.0) continue;
        CHECK(phi.normalizer * combination_distance(phi, u, v) >= d);
      }
  }
}

TEST_CASE("distortion report clamps at 1") {
  DistMatrix a(2, 2.0), b(2, 2.0);
  const Distortion same = distortion(a, b);
  CHECK(same.max_contraction == 1.0);
  CHECK(same.max_expansion == 1.0);

  b.at(0, 1) = 6.0;
  b.at(1, 0) = 1.0;
  const Distortion mixed = distortion(a, b);
  CHECK(mixed.max_expansion == 3.0);
  CHECK(mixed.max_contraction == 2.0);
}
