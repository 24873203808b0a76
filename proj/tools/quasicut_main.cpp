// quasicut: sample quasipartitions of directed shortest-path
// quasimetrics, embed them into quasiultrametrics / 0-1 combinations,
// and round sparsest-cut and multicut LPs with them.
//
// Exit codes: 0 success, 1 input error (or failed verify checks),
// 2 internal assertion failure. Output is JSON on stdout (or --out),
// byte-reproducible for a fixed seed.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

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
#include "quasicut/verify.hpp"

namespace {

using namespace quasicut;

struct Options {
  std::string graph_path;
  std::string pairs_path;
  std::string decomposition_path;
  std::string out_path;
  std::uint64_t seed = 0;
  double r = 0.0;
  int treewidth = 0;  // 0 = not given
  int trials = 100000;
};

enum class Route { tree, exhaustive, decomposition };

Route pick_route(const WeightedDigraph& g, const Options& opt) {
  if (!opt.decomposition_path.empty()) return Route::decomposition;
  if (opt.treewidth > 0) return Route::exhaustive;
  if (is_bidirected_tree(g)) return Route::tree;
  throw Error(Errc::invalid_input,
              "graph is not a bidirected tree; pass --treewidth or --decomposition");
}

SeparatorProvider make_separator(const WeightedDigraph& g, const Options& opt, Route route) {
  if (route == Route::decomposition) {
    TreeDecomposition td =
        parse_decomposition_file(read_file(opt.decomposition_path), g.vertex_count());
    td.validate(g);
    return decomposition_separator_provider(std::move(td));
  }
  return exhaustive_separator_provider(opt.treewidth);
}

SupportBuilder make_builder(const WeightedDigraph& g, const Options& opt) {
  const Route route = pick_route(g, opt);
  if (route == Route::tree) return tree_support_builder(0);
  return treewidth_support_builder(make_separator(g, opt, route));
}

// Smallest separator size whose recursion succeeds; the recursion
// structure is weight-independent, so probing on g settles the
// reweighted pipeline too.
int measured_treewidth(const WeightedDigraph& g) {
  for (int t = 1; t < g.vertex_count(); ++t) {
    try {
      build_partition_plan(g, exhaustive_separator_provider(t));
      return t;
    } catch (const Error& e) {
      if (e.code != Errc::separator_failure) throw;
    }
  }
  throw Error(Errc::separator_not_found, "no separator size admits a balanced recursion");
}

// Cut commands fall back to the measured treewidth instead of
// erroring: the solver needs *some* recursion, and the smallest
// viable t gives the best stated bound.
SupportBuilder make_cut_builder(const WeightedDigraph& g, const Options& opt) {
  if (opt.decomposition_path.empty() && opt.treewidth == 0 && !is_bidirected_tree(g))
    return treewidth_support_builder(exhaustive_separator_provider(measured_treewidth(g)));
  return make_builder(g, opt);
}

void emit(const JsonValue& doc, const Options& opt) {
  if (opt.out_path.empty())
    std::fputs(doc.pretty().c_str(), stdout);
  else
    write_file(opt.out_path, doc.pretty());
}

JsonValue edge_array(const std::vector<int>& ids) {
  JsonValue arr = JsonValue::array();
  for (int id : ids) arr.push_back(id);
  return arr;
}

JsonValue matrix_json(const DistMatrix& m) {
  JsonValue rows = JsonValue::array();
  for (int u = 0; u < m.size(); ++u) {
    JsonValue row = JsonValue::array();
    for (int v = 0; v < m.size(); ++v) row.push_back(m.at(u, v));
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_partition(const Options& opt) {
  const WeightedDigraph g = parse_graph_file(read_file(opt.graph_path));
  const Route route = pick_route(g, opt);
  Rng rng(opt.seed);
  const double z = rng.uniform(opt.r / 2.0);
  const Quasipartition p =
      route == Route::tree
          ? sample_tree_quasipartition(g, opt.r, 0, z)
          : sample_treewidth_quasipartition(g, opt.r, make_separator(g, opt, route), z);

  const DistMatrix metric = shortest_path_quasimetric(g);
  double max_related = 0.0;
  JsonValue pairs = JsonValue::array();
  for (int u = 0; u < p.size(); ++u)
    for (int v = 0; v < p.size(); ++v) {
      if (u == v || !p.related(u, v)) continue;
      JsonValue pr = JsonValue::array();
      pr.push_back(u);
      pr.push_back(v);
      pairs.push_back(std::move(pr));
      max_related = std::max(max_related, metric.at(u, v));
    }

  JsonValue doc = JsonValue::object();
  doc["command"] = "partition";
  doc["n"] = p.size();
  doc["r"] = opt.r;
  doc["seed"] = opt.seed;
  doc["z"] = z;
  doc["related_pairs"] = std::move(pairs);
  JsonValue cert = JsonValue::object();
  cert["reflexive"] = p.is_reflexive();
  cert["transitive"] = p.is_transitive();
  cert["r_bounded"] = is_r_bounded(p, metric, opt.r);
  cert["max_related_distance"] = max_related;
  doc["certificate"] = std::move(cert);
  emit(doc, opt);
  return 0;
}

int run_embed(const Options& opt) {
  const WeightedDigraph g = parse_graph_file(read_file(opt.graph_path));
  const ScaleFamily fam = build_scale_family(g, make_builder(g, opt));
  Rng rng(opt.seed);
  const QuasiUltrametric um = embed_quasiultrametric(fam, draw_scale_choice(fam, rng));

  // Back to original units for the report.
  const int n = fam.n();
  DistMatrix um_orig(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) um_orig.at(u, v) = um.at(u, v) / fam.scale_factor;
  const DistMatrix metric = shortest_path_quasimetric(g);
  const Distortion dist = distortion(metric, um_orig);

  const ConvexCombination01 phi = embed_01_combination(fam);
  double coeff_sum = 0.0;
  for (const auto& item : phi.items) coeff_sum += item.coefficient;

  JsonValue doc = JsonValue::object();
  doc["command"] = "embed";
  doc["n"] = n;
  doc["seed"] = opt.seed;
  doc["scale_factor"] = fam.scale_factor;
  doc["levels"] = static_cast<int>(fam.scales.size());
  doc["ultrametric"] = matrix_json(um_orig);
  JsonValue rep = JsonValue::object();
  rep["max_contraction"] = dist.max_contraction;
  rep["max_expansion"] = dist.max_expansion;
  rep["non_contracting"] = dist.max_contraction <= 1.0;
  doc["distortion"] = std::move(rep);
  JsonValue comb = JsonValue::object();
  comb["size"] = static_cast<int>(phi.items.size());
  comb["normalizer"] = phi.normalizer;
  comb["coefficient_sum"] = coeff_sum;
  doc["combination"] = std::move(comb);
  emit(doc, opt);
  return 0;
}

int run_sparsest_cut(const Options& opt) {
  const WeightedDigraph g = parse_graph_file(read_file(opt.graph_path));
  CutInstance inst{g, parse_pairs_file(read_file(opt.pairs_path))};
  const CutResult res = solve_sparsest_cut(inst, make_cut_builder(g, opt));

  JsonValue doc = JsonValue::object();
  doc["command"] = "sparsest-cut";
  doc["n"] = g.vertex_count();
  doc["seed"] = opt.seed;
  doc["cut_edges"] = edge_array(res.cut_edges);
  doc["capacity"] = res.capacity;
  doc["separated_demand"] = res.separated_demand;
  doc["separated_pairs"] = edge_array(res.separated_pairs);
  doc["sparsity"] = res.sparsity;
  doc["lp_value"] = res.lp_value;
  doc["candidate_count"] = res.candidate_count;
  doc["guarantee"] = res.guarantee;
  JsonValue cert = JsonValue::object();
  cert["certified_bound"] = res.guarantee * res.lp_value;
  cert["sparsity_within_bound"] =
      res.sparsity <= res.guarantee * res.lp_value + 1e-6 * std::max(1.0, res.guarantee * res.lp_value);
  doc["certificate"] = std::move(cert);
  emit(doc, opt);
  return 0;
}

int run_multicut(const Options& opt) {
  const WeightedDigraph g = parse_graph_file(read_file(opt.graph_path));
  const std::vector<DemandPair> demand = parse_pairs_file(read_file(opt.pairs_path));
  std::vector<std::pair<int, int>> pairs;
  for (const DemandPair& p : demand) pairs.emplace_back(p.source, p.sink);
  const MulticutResult mc = solve_multicut(g, pairs, make_cut_builder(g, opt));

  bool separated = true;
  for (const auto& [s, t] : pairs)
    if (oracle_reachable(g, mc.cut_edges, s)[t]) separated = false;

  JsonValue doc = JsonValue::object();
  doc["command"] = "multicut";
  doc["n"] = g.vertex_count();
  doc["seed"] = opt.seed;
  doc["cut_edges"] = edge_array(mc.cut_edges);
  doc["capacity"] = mc.capacity;
  JsonValue rounds = JsonValue::array();
  for (const MulticutIteration& it : mc.iterations) {
    JsonValue round = JsonValue::object();
    round["cut_edges"] = edge_array(it.cut.cut_edges);
    round["capacity"] = it.cut.capacity;
    round["sparsity"] = it.cut.sparsity;
    round["lp_value"] = it.cut.lp_value;
    round["remaining_before"] = edge_array(it.remaining_before);
    // separated_pairs indexes the remaining list; report global ids.
    JsonValue sep = JsonValue::array();
    for (int local : it.cut.separated_pairs) sep.push_back(it.remaining_before[local]);
    round["separated_pairs"] = std::move(sep);
    rounds.push_back(std::move(round));
  }
  doc["iterations"] = std::move(rounds);
  JsonValue cert = JsonValue::object();
  cert["all_pairs_separated"] = separated;
  doc["certificate"] = std::move(cert);
  emit(doc, opt);
  return separated ? 0 : 2;
}

int run_verify(const Options& opt, const std::string& cli_path) {
  VerifyOptions vo;
  vo.trials = opt.trials;
  vo.cli_path = cli_path;
  const std::vector<CheckResult> checks = run_acceptance_checks(vo);

  JsonValue doc = JsonValue::object();
  doc["command"] = "verify";
  doc["trials"] = opt.trials;
  JsonValue table = JsonValue::array();
  for (const CheckResult& c : checks) {
    JsonValue row = JsonValue::object();
    row["name"] = c.name;
    row["pass"] = c.pass;
    row["detail"] = c.detail;
    table.push_back(std::move(row));
  }
  doc["checks"] = std::move(table);
  doc["all_pass"] = all_pass(checks);
  emit(doc, opt);
  return all_pass(checks) ? 0 : 1;
}

// argv[0] as something re-invokable from any cwd: absolutize only when
// it names a path; bare names resolve through PATH anyway.
std::string self_path(const char* argv0) {
  const std::string s = argv0;
  if (s.find('/') == std::string::npos) return s;
  std::error_code ec;
  const std::filesystem::path abs = std::filesystem::absolute(s, ec);
  return ec ? s : abs.string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random quasipartitions, quasiultrametric embeddings, and LP rounding "
               "for directed sparsest cut and multicut"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool needs_graph) {
    if (needs_graph) cmd->add_option("graph", opt.graph_path, "graph file")->required();
    cmd->add_option("--seed", opt.seed, "RNG seed (default 0)");
    cmd->add_option("--treewidth", opt.treewidth, "exhaustive balanced separators up to this size")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--decomposition", opt.decomposition_path, "tree decomposition file");
    cmd->add_option("--out", opt.out_path, "write JSON here instead of stdout");
  };

  CLI::App* partition = app.add_subcommand("partition", "sample one random quasipartition");
  add_common(partition, true);
  partition->add_option("--r", opt.r, "radius bound")->required()->check(CLI::PositiveNumber);

  CLI::App* embed = app.add_subcommand("embed", "quasiultrametric + 0-1 combination embedding");
  add_common(embed, true);

  CLI::App* sparsest = app.add_subcommand("sparsest-cut", "LP + rounding for sparsest cut");
  add_common(sparsest, true);
  sparsest->add_option("--pairs", opt.pairs_path, "demand pairs file")->required();

  CLI::App* multicut = app.add_subcommand("multicut", "iterated sparsest-cut multicut");
  add_common(multicut, true);
  multicut->add_option("--pairs", opt.pairs_path, "terminal pairs file")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--trials", opt.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  verify->add_option("--out", opt.out_path, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(partition)) return run_partition(opt);
    if (app.got_subcommand(embed)) return run_embed(opt);
    if (app.got_subcommand(sparsest)) return run_sparsest_cut(opt);
    if (app.got_subcommand(multicut)) return run_multicut(opt);
    if (app.got_subcommand(verify)) return run_verify(opt, self_path(argv[0]));
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code) << ": " << e.what() << "\n";
    return is_input_error(e.code) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
