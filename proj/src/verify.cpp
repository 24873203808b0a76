#include "quasicut/verify.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "quasicut/corpus.hpp"
#include "quasicut/cut.hpp"
#include "quasicut/embedding.hpp"
#include "quasicut/errors.hpp"
#include "quasicut/graph_ops.hpp"
#include "quasicut/io.hpp"
#include "quasicut/oracle.hpp"
#include "quasicut/partition_sampling.hpp"
#include "quasicut/rng.hpp"
#include "quasicut/separator.hpp"

namespace quasicut {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kTreeCorpusSeed = 101;
constexpr std::uint64_t kTreewidthCorpusSeed = 202;
constexpr std::uint64_t kEmbedTreeCorpusSeed = 303;
constexpr std::uint64_t kEmbedTreewidthCorpusSeed = 404;
constexpr std::uint64_t kCutCorpusSeed = 505;
constexpr std::uint64_t kDrawSeed = 606;
constexpr std::uint64_t kChoiceSeed = 707;
constexpr std::uint64_t kMonteCarloSeed = 808;

const double kRadiusGrid[] = {0.5, 1.0, 4.0, 32.0};

// floor(log2 x) for positive finite x, exact (frexp yields
// x = m * 2^e with m in [0.5, 1)).
int floor_log2(double x) {
  int e = 0;
  std::frexp(x, &e);
  return e - 1;
}

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct SupportCase {
  const WeightedDigraph* g = nullptr;
  const DistMatrix* metric = nullptr;
  double r = 0.0;
  bool tree = false;
  double beta = 0.0;  // pre-transform Lipschitz bound: 2 or 4*2*(floor(log2 n)+1)
  WeightedSupport plain;
  WeightedSupport forced;
};

struct FamilyCase {
  ScaleFamily fam;
  double beta = 0.0;
  bool tree = false;
};

struct Ctx {
  VerifyOptions opts;

  std::vector<WeightedDigraph> trees;
  std::vector<DistMatrix> tree_metrics;
  std::vector<TreewidthInstance> tws;
  std::vector<DistMatrix> tw_metrics;
  std::vector<SupportCase> cases;

  std::vector<FamilyCase> fams;

  std::vector<CutCorpusInstance> cuts;
};

double tw_beta(int n) { return 4.0 * 2.0 * (floor_log2(static_cast<double>(n)) + 1); }

// ---- criterion 1: structural soundness --------------------------------

CheckResult check_structural(Ctx& ctx) {
  const auto start = Clock::now();
  CheckResult res;
  res.name = "structural-soundness";

  ctx.trees = corpus_trees(100, 12, kTreeCorpusSeed);
  for (const WeightedDigraph& t : ctx.trees)
    ctx.tree_metrics.push_back(shortest_path_quasimetric(t));
  ctx.tws = corpus_treewidth(100, 8, kTreewidthCorpusSeed);
  for (const TreewidthInstance& ti : ctx.tws)
    ctx.tw_metrics.push_back(shortest_path_quasimetric(ti.graph));

  const SeparatorProvider sep2 = exhaustive_separator_provider(2);
  for (size_t i = 0; i < ctx.trees.size(); ++i)
    for (double r : kRadiusGrid) {
      SupportCase c;
      c.g = &ctx.trees[i];
      c.metric = &ctx.tree_metrics[i];
      c.r = r;
      c.tree = true;
      c.beta = 2.0;
      c.plain = tree_quasipartition_support(ctx.trees[i], r, 0);
      c.forced = forced_support(ctx.trees[i], r, tree_support_builder(0));
      ctx.cases.push_back(std::move(c));
    }
  for (size_t i = 0; i < ctx.tws.size(); ++i)
    for (double r : kRadiusGrid) {
      SupportCase c;
      c.g = &ctx.tws[i].graph;
      c.metric = &ctx.tw_metrics[i];
      c.r = r;
      c.tree = false;
      c.beta = tw_beta(ctx.tws[i].graph.vertex_count());
      c.plain = treewidth_quasipartition_support(ctx.tws[i].graph, r, sep2);
      c.forced = forced_support(ctx.tws[i].graph, r, treewidth_support_builder(sep2));
      ctx.cases.push_back(std::move(c));
    }

  int violations = 0;
  int supports = 0, items = 0, draws = 0;
  std::string first;
  auto flag = [&](const std::string& what) {
    ++violations;
    if (first.empty()) first = what;
  };

  Rng rng(kDrawSeed);
  for (const SupportCase& c : ctx.cases) {
    ++supports;
    if (!validate_support(c.plain, *c.metric)) flag("support invariant failed");
    items += static_cast<int>(c.plain.items.size());
    for (const SupportItem& it : c.plain.items) {
      if (!it.partition.is_reflexive()) flag("non-reflexive member");
      if (!it.partition.is_transitive()) flag("non-transitive member");
      if (!is_r_bounded(it.partition, *c.metric, c.r)) flag("unbounded member");
    }
    for (int k = 0; k < 2; ++k) {
      ++draws;
      const double z = rng.uniform(c.r / 2.0);
      const Quasipartition p =
          c.tree ? sample_tree_quasipartition(*c.g, c.r, 0, z)
                 : sample_treewidth_quasipartition(*c.g, c.r, exhaustive_separator_provider(2), z);
      if (!p.is_reflexive()) flag("non-reflexive sample");
      if (!p.is_transitive()) flag("non-transitive sample");
      if (!is_r_bounded(p, *c.metric, c.r)) flag("unbounded sample");
    }
  }

  res.seconds = elapsed(start);
  std::ostringstream os;
  os << supports << " supports, " << items << " members, " << draws << " samples, "
     << violations << " violations";
  if (!first.empty()) os << " (first: " << first << ")";
  if (res.seconds >= 120.0) {
    os << "; exceeded the 2 minute budget";
    res.pass = false;
  } else {
    res.pass = violations == 0;
  }
  res.detail = os.str();
  return res;
}

// ---- criterion 2: tree Lipschitz bound ---------------------------------

CheckResult check_tree_lipschitz(const Ctx& ctx) {
  const auto start = Clock::now();
  CheckResult res;
  res.name = "tree-lipschitz";

  int pairs = 0, violations = 0;
  double worst = 0.0;
  for (const SupportCase& c : ctx.cases) {
    if (!c.tree) continue;
    const int n = c.metric->size();
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const double d = c.metric->at(u, v);
        if (!finite_dist(d)) continue;
        ++pairs;
        // Pr * r / d <= 2  <=>  measure <= d with measure = Pr * (r/2);
        // both sides are dyadic, so the comparison is exact.
        const double measure = c.plain.removal_measure(u, v);
        if (measure > d) ++violations;
        if (d > 0.0) worst = std::max(worst, 2.0 * measure / d);
      }
  }

  res.pass = violations == 0;
  res.seconds = elapsed(start);
  std::ostringstream os;
  os << pairs << " pairs, " << violations << " violations, max Pr*r/d = "
     << format_double(worst) << " (bound 2)";
  res.detail = os.str();
  return res;
}

// ---- criterion 3: treewidth Lipschitz bound + support size -------------

CheckResult check_treewidth_lipschitz(const Ctx& ctx) {
  const auto start = Clock::now();
  CheckResult res;
  res.name = "treewidth-lipschitz";

  int pairs = 0, violations = 0, oversize = 0;
  double worst = 0.0;
  for (const SupportCase& c : ctx.cases) {
    if (c.tree) continue;
    const int n = c.metric->size();
    if (static_cast<int>(c.plain.items.size()) >= n * n) ++oversize;
    const double bound_coeff = c.beta / 2.0;  // 4 * t * (floor(log2 n) + 1), t = 2
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const double d = c.metric->at(u, v);
        if (!finite_dist(d)) continue;
        ++pairs;
        // Pr <= 4tL d / r  <=>  2 * measure <= 4tL * d; exact dyadics.
        const double measure = c.plain.removal_measure(u, v);
        if (2.0 * measure > 2.0 * bound_coeff * d) ++violations;
        if (d > 0.0) worst = std::max(worst, 2.0 * measure / (2.0 * bound_coeff * d));
      }
  }

  res.pass = violations == 0 && oversize == 0;
  res.seconds = elapsed(start);
  std::ostringstream os;
  os << pairs << " pairs, " << violations << " bound violations, " << oversize
     << " oversized supports, max Pr/(4tL d/r) = " << format_double(worst);
  res.detail = os.str();
  return res;
}

// ---- criterion 4: forcing transform ------------------------------------

CheckResult check_forcing(const Ctx& ctx) {
  const auto start = Clock::now();
  CheckResult res;
  res.name = "forcing-transform";

  int forced_pairs = 0, violations = 0;
  std::string first;
  auto flag = [&](const std::string& what) {
    ++violations;
    if (first.empty()) first = what;
  };

  for (const SupportCase& c : ctx.cases) {
    if (!validate_support(c.forced, *c.metric)) flag("forced support invariant failed");
    const int n = c.metric->size();
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const double d = c.metric->at(u, v);
        if (!finite_dist(d)) continue;
        const double measure = c.forced.removal_measure(u, v);
        if (2.0 * n * d <= c.r) {
          ++forced_pairs;
          if (measure != 0.0) flag("forced pair with positive removal measure");
        }
        // Post-transform constant <= 2 * beta:
        // (measure / (r/4)) * r / d <= 2 beta  <=>  2 * measure <= beta * d.
        if (2.0 * measure > c.beta * d) flag("forced Lipschitz bound exceeded");
      }
  }

  res.pass = violations == 0;
  res.seconds = elapsed(start);
  std::ostringstream os;
  os << ctx.cases.size() << " forced supports, " << forced_pairs
     << " pairs under the forcing radius, " << violations << " violations";
  if (!first.empty()) os << " (first: " << first << ")";
  res.detail = os.str();
  return res;
}

// ---- criterion 5: quasiultrametric embedding ---------------------------

CheckResult check_quasiultrametric(Ctx& ctx) {
  const auto start = Clock::now();
  CheckResult res;
  res.name = "quasiultrametric-embedding";

  const std::vector<WeightedDigraph> etrees = corpus_trees(100, 12, kEmbedTreeCorpusSeed, true);
  const std::vector<TreewidthInstance> etws =
      corpus_treewidth(100, 8, kEmbedTreewidthCorpusSeed, true);
  const SeparatorProvider sep2 = exhaustive_separator_provider(2);
  for (const WeightedDigraph& t : etrees) {
    FamilyCase fc;
    fc.fam = build_scale_family(t, tree_support_builder(0));
    fc.beta = 2.0;
    fc.tree = true;
    ctx.fams.push_back(std::move(fc));
  }
  for (const TreewidthInstance& ti : etws) {
    FamilyCase fc;
    fc.fam = build_scale_family(ti.graph, treewidth_support_builder(sep2));
    fc.beta = tw_beta(ti.graph.vertex_count());
    fc.tree = false;
    ctx.fams.push_back(std::move(fc));
  }

  int violations = 0;
  std::string first;
  auto flag = [&](const std::string& what) {
    ++violations;
    if (first.empty()) first = what;
  };

  double worst_margin = 0.0;  // max of E/d - bound over all pairs
  Rng choice_rng(kChoiceSeed);
  for (const FamilyCase& fc : ctx.fams) {
    const ScaleFamily& fam = fc.fam;
    const int n = fam.n();
    const int top = fam.top_level();

    for (int k = 0; k < 3; ++k) {
      const std::vector<int> choice = draw_scale_choice(fam, choice_rng);
      const QuasiUltrametric um = embed_quasiultrametric(fam, choice);
      if (!validate_quasiultrametric(um).ok()) flag("strong triangle inequality failed");
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          const double d = fam.metric.at(u, v);
          if (finite_dist(d) && um.at(u, v) < d) flag("contracting output");
        }
    }

    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const double d = fam.metric.at(u, v);
        if (!finite_dist(d) || d <= 0.0) continue;
        const double expect = expected_ultrametric_distance(fam, u, v);
        const int lo = floor_log2(d);
        const int hi = std::min(floor_log2(2.0 * n * d), top);
        const int mid_scales = std::max(0, hi - lo);
        const double bound = 4.0 + 4.0 * fc.beta * mid_scales;
        const double ratio = expect / d;
        worst_margin = std::max(worst_margin, ratio - bound);
        if (ratio > bound + 1e-9) flag("expected expansion bound exceeded");
      }
  }

  // Monte Carlo cross-check on the first family of each kind.
  double worst_sigmas = 0.0;
  const int trials = std::max(1000, ctx.opts.trials);
  size_t first_tw = 0;
  while (first_tw < ctx.fams.size() && ctx.fams[first_tw].tree) ++first_tw;
  for (size_t idx : {size_t{0}, first_tw}) {
    if (idx >= ctx.fams.size()) continue;
    const ScaleFamily& fam = ctx.fams[idx].fam;
    const int n = fam.n();
    const int top = fam.top_level();
    Rng rng(kMonteCarloSeed);
    std::vector<double> sum(static_cast<size_t>(n) * n, 0.0);
    for (int tcount = 0; tcount < trials; ++tcount) {
      const std::vector<int> choice = draw_scale_choice(fam, rng);
      const QuasiUltrametric um = embed_quasiultrametric(fam, choice);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (u != v && finite_dist(fam.metric.at(u, v)))
            sum[static_cast<size_t>(u) * n + v] += um.at(u, v);
    }
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v || !finite_dist(fam.metric.at(u, v))) continue;
        // Tail probabilities give the exact mean and variance of d*.
        double expect = 1.0, expect_sq = 1.0, tail_product = 1.0;
        std::vector<double> tails(top + 1, 0.0);
        for (int i = top; i >= 0; --i) {
          tail_product *= 1.0 - fam.scales[i].support.removal_probability(u, v);
          tails[i] = 1.0 - tail_product;
        }
        for (int i = 0; i <= top; ++i) {
          expect += std::ldexp(tails[i], i);
          expect_sq += 3.0 * std::ldexp(tails[i], 2 * i);
        }
        const double variance = std::max(0.0, expect_sq - expect * expect);
        const double sigma_mean = std::sqrt(variance / trials);
        const double mean = sum[static_cast<size_t>(u) * n + v] / trials;
        const double gap = std::abs(mean - expect);
        if (sigma_mean > 0.0) worst_sigmas = std::max(worst_sigmas, gap / sigma_mean);
        if (gap > 3.0 * sigma_mean + 1e-12) flag("Monte Carlo mean off by more than 3 stderr");
      }
  }

  res.pass = violations == 0;
  res.seconds = elapsed(start);
  std::ostringstream os;
  os << ctx.fams.size() << " families, " << violations
     << " violations, max (E/d - bound) = " << format_double(worst_margin)
     << ", max MC gap = " << format_double(worst_sigmas) << " stderr";
  if (!first.empty()) os << " (first: " << first << ")";
  res.detail = os.str();
  return res;
}

// ---- criterion 6: 0-1 convex combination -------------------------------

CheckResult check_combination(const Ctx& ctx) {
  const auto start = Clock::now();
  CheckResult res;
  res.name = "zero-one-combination";

  int violations = 0;
  std::string first;
  auto flag = [&](const std::string& what) {
    ++violations;
    if (first.empty()) first = what;
  };

  for (const FamilyCase& fc : ctx.fams) {
    const ScaleFamily& fam = fc.fam;
    const int n = fam.n();
    const int top = fam.top_level();
    const ConvexCombination01 phi = embed_01_combination(fam);

    double coeff_sum = 0.0;
    for (const ConvexCombination01::Item& item : phi.items) coeff_sum += item.coefficient;
    if (std::abs(coeff_sum - 1.0) > 1e-12) flag("coefficients do not sum to 1");

    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const double d = fam.metric.at(u, v);
        if (!finite_dist(d) || d <= 0.0) continue;

        // c * d_phi(u,v) as the per-scale sum 8 * measure_i: with
        // zmax_i = 2^i/4 the scale-i term 2^(i+1) p_i equals
        // 8 * measure_i, a dyadic number. The lower bound c*d_phi >= d
        // is then an exact comparison.
        double scaled = 0.0;
        for (const Scale& s : fam.scales)
          scaled += 8.0 * s.support.removal_measure(u, v);
        if (scaled < d) flag("lower bound c*d_phi >= d failed");

        const int lo = floor_log2(d);
        const int hi = std::min(floor_log2(2.0 * n * d), top);
        const int mid_scales = std::max(0, hi - lo);
        const double upper =
            std::ldexp(1.0, std::min(lo, top) + 2) - 2.0 + 4.0 * fc.beta * d * mid_scales;
        if (scaled > upper + 1e-9 * std::max(1.0, upper))
          flag("upper bound scale sum exceeded");

        const double merged = phi.normalizer * combination_distance(phi, u, v);
        if (std::abs(merged - scaled) > 1e-9 * std::max(1.0, scaled))
          flag("merged combination disagrees with scale sum");
      }
  }

  res.pass = violations == 0;
  res.seconds = elapsed(start);
  std::ostringstream os;
  os << ctx.fams.size() << " combinations, " << violations << " violations";
  if (!first.empty()) os << " (first: " << first << ")";
  res.detail = os.str();
  return res;
}

// ---- criterion 7: threshold round-trip ---------------------------------

CheckResult check_round_trip(const Ctx& ctx) {
  const auto start = Clock::now();
  CheckResult res;
  res.name = "threshold-round-trip";

  int thresholds = 0, violations = 0;
  std::string first;
  auto flag = [&](const std::string& what) {
    ++violations;
    if (first.empty()) first = what;
  };

  Rng rng(kChoiceSeed + 1);
  for (const FamilyCase& fc : ctx.fams) {
    const ScaleFamily& fam = fc.fam;
    const int n = fam.n();
    for (int k = 0; k < 2; ++k) {
      const QuasiUltrametric um = embed_quasiultrametric(fam, draw_scale_choice(fam, rng));
      std::vector<double> values;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (u != v && finite_dist(um.at(u, v))) values.push_back(um.at(u, v));
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      std::vector<double> rs = {0.0};
      for (size_t i = 0; i < values.size(); ++i) {
        rs.push_back(values[i]);
        if (i + 1 < values.size()) rs.push_back((values[i] + values[i + 1]) / 2.0);
      }
      rs.push_back(values.empty() ? 1.0 : values.back() * 2.0);

      for (double r : rs) {
        ++thresholds;
        try {
          const Quasipartition p = quasiultrametric_to_quasipartition(um, r);
          if (!p.is_transitive()) flag("threshold relation not transitive");
          for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
              if (p.related(u, v) && !(fam.metric.at(u, v) <= r))
                flag("threshold relation not r-bounded");
        } catch (const Error&) {
          flag("thresholding threw");
        }
      }
    }
  }

  res.pass = violations == 0;
  res.seconds = elapsed(start);
  std::ostringstream os;
  os << thresholds << " thresholds, " << violations << " violations";
  if (!first.empty()) os << " (first: " << first << ")";
  res.detail = os.str();
  return res;
}

// ---- criterion 8: sparsest-cut pipeline --------------------------------

CheckResult check_sparsest_cut(Ctx& ctx) {
  const auto start = Clock::now();
  CheckResult res;
  res.name = "sparsest-cut-pipeline";

  ctx.cuts = corpus_cut_instances(50, 8, kCutCorpusSeed);
  const SupportBuilder builder = treewidth_support_builder(exhaustive_separator_provider(2));

  int violations = 0;
  std::string first;
  auto flag = [&](const std::string& what) {
    ++violations;
    if (first.empty()) first = what;
  };

  double worst_lp_gap = 0.0;       // max lp_value / opt
  double worst_round_gap = 0.0;    // max rounded / (guarantee * lp)
  for (const CutCorpusInstance& cc : ctx.cuts) {
    CutInstance inst{cc.graph, cc.pairs};
    const CutResult opt = brute_force_sparsest_cut(inst);
    const CutResult got = solve_sparsest_cut(inst, builder);

    if (got.lp_value > opt.sparsity + 1e-6 * std::max(1.0, opt.sparsity))
      flag("LP value above brute-force optimum");
    if (opt.sparsity > 0.0) worst_lp_gap = std::max(worst_lp_gap, got.lp_value / opt.sparsity);

    const double certified = got.guarantee * got.lp_value;
    if (got.sparsity > certified + 1e-6 * std::max(1.0, certified))
      flag("rounded sparsity above the distortion certificate");
    if (certified > 0.0) worst_round_gap = std::max(worst_round_gap, got.sparsity / certified);

    if (got.sparsity < opt.sparsity - 1e-9 * std::max(1.0, opt.sparsity))
      flag("rounded sparsity below brute-force optimum");
  }

  res.seconds = elapsed(start);
  std::ostringstream os;
  os << ctx.cuts.size() << " instances, " << violations
     << " violations, max lp/opt = " << format_double(worst_lp_gap)
     << ", max rounded/certificate = " << format_double(worst_round_gap);
  if (!first.empty()) os << " (first: " << first << ")";
  if (res.seconds >= 600.0) {
    os << "; exceeded the 10 minute budget";
    res.pass = false;
  } else {
    res.pass = violations == 0;
  }
  res.detail = os.str();
  return res;
}

// ---- criterion 9: multicut ---------------------------------------------

CheckResult check_multicut(const Ctx& ctx) {
  const auto start = Clock::now();
  CheckResult res;
  res.name = "multicut-pipeline";

  const SupportBuilder builder = treewidth_support_builder(exhaustive_separator_provider(2));

  int violations = 0;
  std::string first;
  auto flag = [&](const std::string& what) {
    ++violations;
    if (first.empty()) first = what;
  };

  double worst_alpha = 0.0, worst_capacity_ratio = 0.0;
  for (const CutCorpusInstance& cc : ctx.cuts) {
    std::vector<std::pair<int, int>> pairs;
    for (const DemandPair& p : cc.pairs) pairs.emplace_back(p.source, p.sink);
    const MulticutResult mc = solve_multicut(cc.graph, pairs, builder);

    // Independent reachability recheck.
    for (const auto& [s, t] : pairs)
      if (oracle_reachable(cc.graph, mc.cut_edges, s)[t]) flag("pair left connected");

    // Harmonic bound with the per-round approximation factor measured
    // against the brute-force sparsest-cut optimum of that round.
    double alpha = 1.0;
    for (const MulticutIteration& it : mc.iterations) {
      CutInstance sub;
      sub.graph = cc.graph;
      for (int idx : it.remaining_before)
        sub.pairs.push_back({pairs[idx].first, pairs[idx].second, 1.0});
      const CutResult opt = brute_force_sparsest_cut(sub);
      if (opt.sparsity > 0.0)
        alpha = std::max(alpha, it.cut.sparsity / opt.sparsity);
      else if (it.cut.sparsity > 0.0)
        flag("round paid for freely separable pairs");
    }

    CutInstance full{cc.graph, cc.pairs};
    const CutResult opt_mc = brute_force_multicut(full);
    double harmonic = 0.0;
    for (size_t j = 1; j <= pairs.size(); ++j) harmonic += 1.0 / static_cast<double>(j);
    const double budget = alpha * harmonic * opt_mc.capacity;
    if (mc.capacity > budget + 1e-6 * std::max(1.0, budget))
      flag("capacity above the harmonic budget");
    worst_alpha = std::max(worst_alpha, alpha);
    if (budget > 0.0)
      worst_capacity_ratio = std::max(worst_capacity_ratio, mc.capacity / budget);
  }

  res.pass = violations == 0;
  res.seconds = elapsed(start);
  std::ostringstream os;
  os << ctx.cuts.size() << " instances, " << violations
     << " violations, max per-round approximation ratio = " << format_double(worst_alpha)
     << ", max capacity/budget = " << format_double(worst_capacity_ratio);
  if (!first.empty()) os << " (first: " << first << ")";
  res.detail = os.str();
  return res;
}

// ---- criterion 10: CLI determinism -------------------------------------

struct RunOutput {
  int exit_code = -1;
  std::string out;
};

RunOutput run_command(const std::string& cmd) {
  RunOutput r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  if (status >= 0 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

CheckResult check_cli_determinism(const Ctx& ctx) {
  const auto start = Clock::now();
  CheckResult res;
  res.name = "cli-determinism";

  if (ctx.opts.cli_path.empty()) {
    res.pass = false;
    res.detail = "no CLI path provided";
    return res;
  }

  const fs::path dir =
      fs::temp_directory_path() / ("quasicut-verify-" + std::to_string(::getpid()));
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    res.pass = false;
    res.detail = "cannot create temp dir";
    return res;
  }

  const std::string tree_file = (dir / "tree.graph").string();
  const std::string tw_file = (dir / "tw.graph").string();
  const std::string dec_file = (dir / "tw.dec").string();
  const std::string pairs_file = (dir / "demo.pairs").string();
  write_file(tree_file,
             "n 4\ne 0 1 1\ne 1 0 2\ne 1 2 3\ne 2 1 1\ne 1 3 2\ne 3 1 2\n");
  write_file(tw_file,
             "n 4\ne 0 1 1\ne 1 0 2\ne 1 2 2\ne 2 1 1\ne 0 2 3\ne 2 0 1\ne 2 3 2\ne 3 2 1\n");
  write_file(dec_file, "b 0 0 1 2\nb 1 2 3\nlink 0 1\n");
  write_file(pairs_file, "t 0 3 1\nt 3 0 1\n");

  const std::string cli = shell_quote(ctx.opts.cli_path);
  const std::vector<std::string> commands = {
      cli + " partition " + shell_quote(tree_file) + " --r 4 --seed 7",
      cli + " partition " + shell_quote(tw_file) + " --r 4 --seed 7 --treewidth 2",
      cli + " partition " + shell_quote(tw_file) + " --r 4 --seed 7 --decomposition " +
          shell_quote(dec_file),
      cli + " embed " + shell_quote(tree_file) + " --seed 9",
      cli + " embed " + shell_quote(tw_file) + " --seed 9 --treewidth 2",
      cli + " sparsest-cut " + shell_quote(tw_file) + " --pairs " + shell_quote(pairs_file) +
          " --treewidth 2 --seed 3",
      cli + " multicut " + shell_quote(tw_file) + " --pairs " + shell_quote(pairs_file) +
          " --treewidth 2 --seed 3",
  };

  int commands_run = 0, violations = 0;
  std::string first;
  for (const std::string& cmd : commands) {
    ++commands_run;
    const RunOutput a = run_command(cmd);
    const RunOutput b = run_command(cmd);
    if (a.exit_code != 0 || b.exit_code != 0) {
      ++violations;
      if (first.empty()) first = "non-zero exit";
      continue;
    }
    if (a.out != b.out || a.out.empty()) {
      ++violations;
      if (first.empty()) first = a.out.empty() ? "empty output" : "outputs differ";
    }
  }

  fs::remove_all(dir, ec);

  res.pass = violations == 0;
  res.seconds = elapsed(start);
  std::ostringstream os;
  os << commands_run << " commands run twice, " << violations << " mismatches";
  if (!first.empty()) os << " (first: " << first << ")";
  res.detail = os.str();
  return res;
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks(const VerifyOptions& opts) {
  Ctx ctx;
  ctx.opts = opts;
  std::vector<CheckResult> out;
  out.push_back(check_structural(ctx));
  out.push_back(check_tree_lipschitz(ctx));
  out.push_back(check_treewidth_lipschitz(ctx));
  out.push_back(check_forcing(ctx));
  out.push_back(check_quasiultrametric(ctx));
  out.push_back(check_combination(ctx));
  out.push_back(check_round_trip(ctx));
  out.push_back(check_sparsest_cut(ctx));
  out.push_back(check_multicut(ctx));
  out.push_back(check_cli_determinism(ctx));
  return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace quasicut
