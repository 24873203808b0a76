#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "quasicut/digraph.hpp"
#include "quasicut/dist_matrix.hpp"
#include "quasicut/errors.hpp"
#include "quasicut/io.hpp"
#include "quasicut/tree_decomposition.hpp"

using namespace quasicut;
namespace fs = std::filesystem;

namespace {

Error error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  return Error(Errc::internal, "no error thrown");
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QUASICUT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int rc = ::pclose(pipe);
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("quasicut-io-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name, const std::string& text) const {
    const std::string p = (path / name).string();
    write_file(p, text);
    return p;
  }
};

}  // namespace

TEST_CASE("graph files round-trip") {
  WeightedDigraph g(3, {{0, 1, 0.5}, {1, 0, 2.0}, {1, 2, 1.0}});
  const std::string text = emit_graph_file(g);
  CHECK(text == "n 3\ne 0 1 0.5\ne 1 0 2\ne 1 2 1\n");
  WeightedDigraph back = parse_graph_file(text);
  CHECK(back.vertex_count() == 3);
  REQUIRE(back.edge_count() == 3);
  for (int e = 0; e < 3; ++e) {
    CHECK(back.edge(e).tail == g.edge(e).tail);
    CHECK(back.edge(e).head == g.edge(e).head);
    CHECK(back.edge(e).weight == g.edge(e).weight);
  }

  // Comments and blank lines are ignored, including trailing comments.
  WeightedDigraph c = parse_graph_file("# header\n\nn 2 # two\ne 0 1 1\n");
  CHECK(c.vertex_count() == 2);
  CHECK(c.edge_count() == 1);
}

TEST_CASE("graph parse errors carry 1-based line numbers") {
  Error e = error_of([] { parse_graph_file("n 2\ne 0 0 1\n"); });
  CHECK(e.code == Errc::bad_vertex_id);
  CHECK(e.line == 2);

  e = error_of([] { parse_graph_file("n 2\ne 0 1 1\ne 0 1 2\n"); });
  CHECK(e.code == Errc::duplicate_edge);
  CHECK(e.line == 3);

  e = error_of([] { parse_graph_file("e 0 1 1\n"); });
  CHECK(e.code == Errc::syntax);
  CHECK(e.line == 1);

  e = error_of([] { parse_graph_file("n 2\ne 0 2 1\n"); });
  CHECK(e.code == Errc::bad_vertex_id);

  e = error_of([] { parse_graph_file("n 2\ne 0 1 -1\n"); });
  CHECK(e.code == Errc::syntax);

  e = error_of([] { parse_graph_file("n 2\ne 0 one 1\n"); });
  CHECK(e.code == Errc::syntax);
  CHECK(e.line == 2);

  e = error_of([] { parse_graph_file("n 2\nn 2\n"); });
  CHECK(e.code == Errc::syntax);
  CHECK(e.line == 2);

  e = error_of([] { parse_graph_file("# empty\n"); });
  CHECK(e.code == Errc::syntax);
  CHECK(e.line == -1);

  e = error_of([] { parse_graph_file("n 2\nq 1\n"); });
  CHECK(e.code == Errc::syntax);
  CHECK(e.line == 2);
}

TEST_CASE("pairs files round-trip and validate") {
  std::vector<DemandPair> pairs{{0, 2, 1.5}, {2, 1, 1.0}};
  const std::string text = emit_pairs_file(pairs);
  CHECK(text == "t 0 2 1.5\nt 2 1 1\n");
  std::vector<DemandPair> back = parse_pairs_file(text);
  REQUIRE(back.size() == 2);
  CHECK(back[0].source == 0);
  CHECK(back[0].sink == 2);
  CHECK(back[0].demand == 1.5);

  Error e = error_of([] { parse_pairs_file("t 1 1 1\n"); });
  CHECK(e.code == Errc::same_endpoints);
  CHECK(e.line == 1);

  e = error_of([] { parse_pairs_file("t -1 1 1\n"); });
  CHECK(e.code == Errc::bad_vertex_id);

  e = error_of([] { parse_pairs_file("t 0 1 0\n"); });
  CHECK(e.code == Errc::syntax);

  e = error_of([] { parse_pairs_file("\n"); });
  CHECK(e.code == Errc::syntax);

  e = error_of([] { parse_pairs_file("x 0 1 1\n"); });
  CHECK(e.code == Errc::syntax);
}

TEST_CASE("decomposition files round-trip and validate") {
  TreeDecomposition td;
  td.bags = {{0, 1}, {1, 2}};
  td.tree_edges = {{0, 1}};
  const std::string text = emit_decomposition_file(td);
  CHECK(text == "b 0 0 1\nb 1 1 2\nlink 0 1\n");
  TreeDecomposition back = parse_decomposition_file(text, 3);
  CHECK(back.bags == td.bags);
  CHECK(back.tree_edges == td.tree_edges);

  Error e = error_of([] { parse_decomposition_file("b 0 0 5\n", 3); });
  CHECK(e.code == Errc::bad_vertex_id);
  CHECK(e.line == 1);

  e = error_of([] { parse_decomposition_file("b 1 0\n", 3); });
  CHECK(e.code == Errc::syntax);  // ids must be 0..k-1

  e = error_of([] { parse_decomposition_file("b 0 0\nlink 0 4\n", 3); });
  CHECK(e.code == Errc::syntax);

  e = error_of([] { parse_decomposition_file("b 0 0\nb 0 1\n", 3); });
  CHECK(e.code == Errc::syntax);
  CHECK(e.line == 2);

  e = error_of([] { parse_decomposition_file("link 0 1\n", 3); });
  CHECK(e.code == Errc::syntax);
}

TEST_CASE("JSON encoding is deterministic") {
  JsonValue obj = JsonValue::object();
  obj["b"] = 1;
  obj["a"] = 2;
  CHECK(obj.encode() == "{\"a\":2,\"b\":1}");

  JsonValue arr = JsonValue::array();
  arr.push_back(1);
  arr.push_back(2.5);
  arr.push_back(true);
  arr.push_back(JsonValue());
  CHECK(arr.encode() == "[1,2.5,true,null]");

  JsonValue nested = JsonValue::object();
  nested["a"] = 1;
  nested["b"] = JsonValue::array();
  CHECK(nested.pretty() == "{\n  \"a\": 1,\n  \"b\": []\n}\n");

  JsonValue esc = std::string("a\"b\\c\nd\x01");
  CHECK(esc.encode() == "\"a\\\"b\\\\c\\nd\\u0001\"");

  CHECK(JsonValue(kInf).encode() == "\"inf\"");
  CHECK(JsonValue(-kInf).encode() == "\"-inf\"");
  CHECK(JsonValue(std::nan("")).encode() == "\"nan\"");

  CHECK(JsonValue(3).encode() == "3");
  CHECK(JsonValue(std::int64_t(-5)).encode() == "-5");
  CHECK(JsonValue(std::uint64_t(1) << 63).encode() == "9223372036854775808");
  CHECK(JsonValue::object().encode() == "{}");
  CHECK(JsonValue::array().encode() == "[]");
}

TEST_CASE("format_double is %.17g with named non-finites") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0 / 3.0) == "0.66666666666666663");
  CHECK(format_double(-0.0) == "-0");
  CHECK(format_double(kInf) == "inf");
  CHECK(format_double(-kInf) == "-inf");
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("file IO errors") {
  CHECK(error_of([] { read_file("/nonexistent/quasicut-io-test"); }).code ==
        Errc::invalid_input);
  CHECK(error_of([] { write_file("/nonexistent/dir/file", "x"); }).code ==
        Errc::invalid_input);
}

TEST_CASE("CLI runs are reproducible byte for byte") {
  TempDir dir;
  const std::string tree =
      dir.file("tree.graph", "n 2\ne 0 1 1\ne 1 0 1\n");

  RunResult first = run_cli("partition " + tree + " --r 4 --seed 7");
  RunResult second = run_cli("partition " + tree + " --r 4 --seed 7");
  CHECK(first.status == 0);
  CHECK(second.status == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("\"command\": \"partition\"") != std::string::npos);
  CHECK(first.out.find("\"r_bounded\": true") != std::string::npos);

  // A different seed is allowed to differ, but must still succeed.
  RunResult other = run_cli("partition " + tree + " --r 4 --seed 8");
  CHECK(other.status == 0);
}

TEST_CASE("CLI embed and cut commands") {
  TempDir dir;
  const std::string tree = dir.file("tree.graph", "n 2\ne 0 1 1\ne 1 0 1\n");
  const std::string edge = dir.file("edge.graph", "n 2\ne 0 1 1\n");
  const std::string pairs = dir.file("demo.pairs", "t 0 1 1\n");

  RunResult emb = run_cli("embed " + tree + " --seed 9");
  CHECK(emb.status == 0);
  CHECK(emb.out.find("\"command\": \"embed\"") != std::string::npos);
  CHECK(emb.out.find("\"non_contracting\": true") != std::string::npos);

  RunResult sc = run_cli("sparsest-cut " + edge + " --pairs " + pairs + " --seed 3");
  CHECK(sc.status == 0);
  CHECK(sc.out.find("\"command\": \"sparsest-cut\"") != std::string::npos);
  CHECK(sc.out.find("\"sparsity\": 1\n") != std::string::npos);
  CHECK(sc.out.find("\"sparsity_within_bound\": true") != std::string::npos);

  RunResult mc = run_cli("multicut " + edge + " --pairs " + pairs + " --seed 3");
  CHECK(mc.status == 0);
  CHECK(mc.out.find("\"command\": \"multicut\"") != std::string::npos);
  CHECK(mc.out.find("\"all_pairs_separated\": true") != std::string::npos);

  // --out writes the same bytes to a file and keeps stdout quiet.
  const std::string out_path = (dir.path / "result.json").string();
  RunResult to_file = run_cli("embed " + tree + " --seed 9 --out " + out_path);
  CHECK(to_file.status == 0);
  CHECK(to_file.out.empty());
  CHECK(read_file(out_path) == emb.out);
}

TEST_CASE("CLI exit codes distinguish input errors") {
  TempDir dir;
  const std::string edge = dir.file("edge.graph", "n 2\ne 0 1 1\n");
  const std::string tree = dir.file("tree.graph", "n 2\ne 0 1 1\ne 1 0 1\n");

  CHECK(run_cli("partition /nonexistent.graph --r 4").status == 1);
  // Not a bidirected tree and no width given.
  CHECK(run_cli("partition " + edge + " --r 4").status == 1);
  CHECK(run_cli("partition " + edge + " --r 4 --treewidth 1").status == 0);
  // Missing required flags or unknown commands are parse errors.
  CHECK(run_cli("partition " + tree).status == 1);
  CHECK(run_cli("frobnicate " + tree).status == 1);
  CHECK(run_cli("sparsest-cut " + edge).status == 1);
  CHECK(run_cli("--help").status == 0);

  const std::string bad = dir.file("bad.graph", "n 2\ne 0 0 1\n");
  CHECK(run_cli("partition " + bad + " --r 4").status == 1);
}
