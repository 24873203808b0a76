#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "quasicut/corpus.hpp"
#include "quasicut/cut.hpp"
#include "quasicut/digraph.hpp"
#include "quasicut/dist_matrix.hpp"
#include "quasicut/errors.hpp"
#include "quasicut/oracle.hpp"
#include "quasicut/partition_sampling.hpp"
#include "quasicut/separator.hpp"

using namespace quasicut;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code;
  }
  return Errc::internal;
}

CutInstance two_paths() {
  WeightedDigraph g(4, {{0, 1, 1.0}, {1, 3, 1.0}, {0, 2, 1.0}, {2, 3, 1.0}});
  return {g, {DemandPair{0, 3, 1.0}}};
}

SupportBuilder tw_builder(int t) {
  return treewidth_support_builder(exhaustive_separator_provider(t));
}

}  // namespace

TEST_CASE("cut instance validation") {
  WeightedDigraph g(3, {{0, 1, 1.0}});
  CHECK(code_of([&] { validate_cut_instance({g, {}}); }) == Errc::invalid_input);
  CHECK(code_of([&] { validate_cut_instance({g, {DemandPair{0, 3, 1.0}}}); }) ==
        Errc::bad_vertex_id);
  CHECK(code_of([&] { validate_cut_instance({g, {DemandPair{-1, 1, 1.0}}}); }) ==
        Errc::bad_vertex_id);
  CHECK(code_of([&] { validate_cut_instance({g, {DemandPair{1, 1, 1.0}}}); }) ==
        Errc::same_endpoints);
  CHECK(code_of([&] { validate_cut_instance({g, {DemandPair{0, 1, 0.0}}}); }) ==
        Errc::invalid_input);
  CHECK(code_of([&] { validate_cut_instance({g, {DemandPair{0, 1, -2.0}}}); }) ==
        Errc::invalid_input);

  WeightedDigraph big(65, {{0, 1, 1.0}});
  CHECK(code_of([&] { validate_cut_instance({big, {DemandPair{0, 1, 1.0}}}); }) ==
        Errc::too_large);
}

TEST_CASE("relaxation layout") {
  CutInstance inst = two_paths();
  LinearProgram lp = build_sparsest_cut_lp(inst);
  const int n = 4, m = 4;
  CHECK(lp.var_count() == m + n * (n - 1));
  CHECK(static_cast<int>(lp.rows.size()) == m + n * (n - 1) * (n - 2) + 1);

  for (int e = 0; e < m; ++e) {
    CHECK(lp_edge_var(inst, e) == e);
    CHECK(lp.objective[e] == inst.graph.edge(e).weight);
  }
  std::set<int> dist_vars;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) dist_vars.insert(lp_dist_var(inst, u, v));
  CHECK(static_cast<int>(dist_vars.size()) == n * (n - 1));
  CHECK(*dist_vars.begin() == m);
  CHECK(*dist_vars.rbegin() == lp.var_count() - 1);
  CHECK(lp_dist_var(inst, 0, 1) == m);
  CHECK(lp_dist_var(inst, 1, 0) == m + 3);
  for (int j = m; j < lp.var_count(); ++j) CHECK(lp.objective[j] == 0.0);

  // The last row carries the demand normalization.
  const LpRow& dem = lp.rows.back();
  CHECK(dem.sense == RowSense::greater_eq);
  CHECK(dem.rhs == 1.0);
  CHECK(dem.coeffs[lp_dist_var(inst, 0, 3)] == 1.0);

  LpSolution sol;
  sol.x.assign(lp.var_count(), 0.0);
  sol.x[0] = 0.5;
  sol.x[1] = -0.25;
  sol.x[2] = 1.0;
  std::vector<double> len = lp_edge_lengths(inst, sol);
  CHECK(len == std::vector<double>{0.5, 0.0, 1.0, 0.0});

  LpSolution narrow;
  narrow.x.assign(2, 0.0);
  CHECK(code_of([&] { lp_edge_lengths(inst, narrow); }) == Errc::internal);
}

TEST_CASE("evaluate_cut measures capacity and separation") {
  CutInstance inst{WeightedDigraph(2, {{0, 1, 3.0}}), {DemandPair{0, 1, 2.0}}};

  CutResult cut = evaluate_cut(inst, {0});
  CHECK(cut.capacity == 3.0);
  CHECK(cut.separated_pairs == std::vector<int>{0});
  CHECK(cut.separated_demand == 2.0);
  CHECK(cut.sparsity == doctest::Approx(1.5));

  CutResult nothing = evaluate_cut(inst, {});
  CHECK(nothing.separated_pairs.empty());
  CHECK(nothing.separated_demand == 0.0);
  CHECK(nothing.sparsity == kInf);

  CutResult dup = evaluate_cut(inst, {0, 0});
  CHECK(dup.capacity == 3.0);

  CHECK(code_of([&] { evaluate_cut(inst, {5}); }) == Errc::invalid_input);

  // Cutting one of two parallel routes separates nothing.
  CutInstance par = two_paths();
  CutResult half = evaluate_cut(par, {0});
  CHECK(half.separated_pairs.empty());
  CutResult both = evaluate_cut(par, {0, 2});
  CHECK(both.separated_pairs == std::vector<int>{0});
  CHECK(both.sparsity == doctest::Approx(2.0));
}

TEST_CASE("brute force oracles on pinned instances") {
  SUBCASE("single edge") {
    CutInstance inst{WeightedDigraph(2, {{0, 1, 1.0}}), {DemandPair{0, 1, 1.0}}};
    CutResult bf = brute_force_sparsest_cut(inst);
    CHECK(bf.cut_edges == std::vector<int>{0});
    CHECK(bf.capacity == 1.0);
    CHECK(bf.sparsity == doctest::Approx(1.0));
  }
  SUBCASE("two disjoint paths, lexicographic tie-break") {
    CutResult bf = brute_force_sparsest_cut(two_paths());
    CHECK(bf.capacity == 2.0);
    CHECK(bf.sparsity == doctest::Approx(2.0));
    CHECK(bf.cut_edges == std::vector<int>{0, 2});
  }
  SUBCASE("disconnected pair costs nothing") {
    CutInstance inst{WeightedDigraph(2, {}), {DemandPair{0, 1, 1.0}}};
    CutResult bf = brute_force_sparsest_cut(inst);
    CHECK(bf.cut_edges.empty());
    CHECK(bf.capacity == 0.0);
    CHECK(bf.sparsity == 0.0);
  }
  SUBCASE("capacity ties break by fewest edges, then ids") {
    WeightedDigraph g(3, {{0, 1, 2.0}, {0, 2, 1.0}, {2, 1, 1.0}});
    CutInstance inst{g, {DemandPair{0, 1, 1.0}}};
    CutResult bf = brute_force_sparsest_cut(inst);
    CHECK(bf.capacity == 3.0);
    CHECK(bf.cut_edges == std::vector<int>{0, 1});
  }
  SUBCASE("multicut needs both demand edges") {
    WeightedDigraph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    CutInstance inst{g, {DemandPair{0, 1, 1.0}, DemandPair{2, 3, 1.0}}};
    CutResult bf = brute_force_multicut(inst);
    CHECK(bf.cut_edges == std::vector<int>{0, 1});
    CHECK(bf.capacity == 2.0);
    CHECK(static_cast<int>(bf.separated_pairs.size()) == 2);
  }
  SUBCASE("edge cap") {
    std::vector<Edge> edges;
    for (int i = 0; i < 21; ++i) edges.push_back({i, i + 1, 1.0});
    CutInstance inst{WeightedDigraph(22, edges), {DemandPair{0, 21, 1.0}}};
    CHECK(code_of([&] { brute_force_sparsest_cut(inst); }) == Errc::too_large);
  }
}

TEST_CASE("oracle_reachable honors removals") {
  WeightedDigraph g(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 1.0}});
  std::vector<char> all = oracle_reachable(g, {}, 0);
  CHECK(all == std::vector<char>{1, 1, 1, 1});
  std::vector<char> cut = oracle_reachable(g, {1, 3}, 0);
  CHECK(cut == std::vector<char>{1, 1, 0, 0});
}

TEST_CASE("solve_sparsest_cut end-to-end") {
  SUBCASE("single edge rounds at the LP value") {
    CutInstance inst{WeightedDigraph(2, {{0, 1, 1.0}}), {DemandPair{0, 1, 1.0}}};
    CutResult res = solve_sparsest_cut(inst, tw_builder(1));
    CHECK(res.cut_edges == std::vector<int>{0});
    CHECK(res.sparsity == doctest::Approx(1.0));
    CHECK(res.lp_value == doctest::Approx(1.0));
    CHECK(res.separated_pairs == std::vector<int>{0});
    CHECK(res.candidate_count >= 1);
    CHECK(res.guarantee >= 1.0);
    CHECK(res.sparsity <= res.guarantee * res.lp_value * (1.0 + 1e-9) + 1e-9);
  }
  SUBCASE("disconnected pair returns the empty cut") {
    CutInstance inst{WeightedDigraph(2, {}), {DemandPair{0, 1, 1.0}}};
    CutResult res = solve_sparsest_cut(inst, tw_builder(1));
    CHECK(res.cut_edges.empty());
    CHECK(res.sparsity == 0.0);
    CHECK(res.lp_value == 0.0);
    CHECK(res.candidate_count == 1);
    CHECK(res.separated_pairs == std::vector<int>{0});
  }
  SUBCASE("one disconnected pair short-circuits the rest") {
    CutInstance inst{WeightedDigraph(3, {{0, 1, 1.0}}),
                     {DemandPair{0, 1, 1.0}, DemandPair{2, 0, 1.0}}};
    CutResult res = solve_sparsest_cut(inst, tw_builder(1));
    CHECK(res.cut_edges.empty());
    CHECK(res.sparsity == 0.0);
    CHECK(res.separated_pairs == std::vector<int>{1});
  }
  SUBCASE("corpus instances respect the oracle sandwich") {
    auto corpus = corpus_cut_instances(8, 7, 9090);
    for (size_t k = 0; k < corpus.size(); ++k) {
      CAPTURE(k);
      CutInstance inst{corpus[k].graph, corpus[k].pairs};
      CutResult bf = brute_force_sparsest_cut(inst);
      CutResult res = solve_sparsest_cut(inst, tw_builder(2));
      const double tol = 1e-6 * std::max(1.0, bf.sparsity);
      // LP lower-bounds the optimum; rounding keeps the certificate and
      // can never beat brute force.
      CHECK(res.lp_value <= bf.sparsity + tol);
      if (!res.cut_edges.empty() || res.lp_value > 0.0)
        CHECK(res.sparsity <= res.guarantee * res.lp_value * (1.0 + 1e-9) + tol);
      CHECK(res.sparsity >= bf.sparsity - tol);
      // The reported cut must really do what it claims.
      CutResult echo = evaluate_cut(inst, res.cut_edges);
      CHECK(echo.capacity == doctest::Approx(res.capacity));
      CHECK(echo.separated_pairs == res.separated_pairs);
    }
  }
}

TEST_CASE("solve_multicut separates every pair") {
  SUBCASE("two disjoint demand edges") {
    WeightedDigraph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    std::vector<std::pair<int, int>> pairs{{0, 1}, {2, 3}};
    MulticutResult res = solve_multicut(g, pairs, tw_builder(1));
    CHECK(res.cut_edges == std::vector<int>{0, 1});
    CHECK(res.capacity == 2.0);
    for (auto [s, t] : pairs) CHECK_FALSE(oracle_reachable(g, res.cut_edges, s)[t]);
  }
  SUBCASE("single pair matches sparsest cut") {
    CutInstance inst = two_paths();
    CutResult sc = solve_sparsest_cut(inst, tw_builder(2));
    MulticutResult mc = solve_multicut(inst.graph, {{0, 3}}, tw_builder(2));
    CHECK(mc.iterations.size() == 1);
    CHECK(mc.cut_edges == sc.cut_edges);
    CHECK(mc.capacity == doctest::Approx(sc.capacity));
  }
  SUBCASE("already-disconnected pair is free") {
    WeightedDigraph g(2, {});
    MulticutResult res = solve_multicut(g, {{0, 1}}, tw_builder(1));
    CHECK(res.cut_edges.empty());
    CHECK(res.capacity == 0.0);
    CHECK(res.iterations.size() == 1);
  }
  SUBCASE("empty pair list is rejected") {
    WeightedDigraph g(2, {{0, 1, 1.0}});
    CHECK(code_of([&] { solve_multicut(g, {}, tw_builder(1)); }) == Errc::invalid_input);
  }
  SUBCASE("corpus multicuts verify by independent reachability") {
    auto corpus = corpus_cut_instances(6, 7, 4242);
    for (size_t k = 0; k < corpus.size(); ++k) {
      CAPTURE(k);
      std::vector<std::pair<int, int>> pairs;
      for (const DemandPair& p : corpus[k].pairs) pairs.emplace_back(p.source, p.sink);
      MulticutResult res = solve_multicut(corpus[k].graph, pairs, tw_builder(2));
      for (auto [s, t] : pairs)
        CHECK_FALSE(oracle_reachable(corpus[k].graph, res.cut_edges, s)[t]);
      for (const MulticutIteration& it : res.iterations)
        CHECK_FALSE(it.cut.separated_pairs.empty());

      CutInstance inst{corpus[k].graph, corpus[k].pairs};
      CutResult bf = brute_force_multicut(inst);
      // Any feasible multicut pays at least the optimum.
      CHECK(res.capacity >= bf.capacity - 1e-9 * std::max(1.0, bf.capacity));
    }
  }
}
