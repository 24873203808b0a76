#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quasicut/cut.hpp"
#include "quasicut/digraph.hpp"
#include "quasicut/tree_decomposition.hpp"

namespace quasicut {

// Text formats, one directive per line, `#` starts a comment:
//   graph:         n <count>        then  e <u> <v> <w>
//   pairs:         t <s> <t> <dem>
//   decomposition: b <id> <v...>    and   link <id> <id>
// Errors carry 1-based line numbers.

WeightedDigraph parse_graph_file(const std::string& text);

std::vector<DemandPair> parse_pairs_file(const std::string& text);

// Bag ids must be exactly 0..k-1, each defined once. Vertex ids are
// checked against n here; structural validity is TreeDecomposition's.
TreeDecomposition parse_decomposition_file(const std::string& text, int n);

std::string emit_graph_file(const WeightedDigraph& g);
std::string emit_pairs_file(const std::vector<DemandPair>& pairs);
std::string emit_decomposition_file(const TreeDecomposition& td);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Minimal JSON document model for deterministic output: object keys
// are stored sorted, doubles print with %.17g, and non-finite values
// print as the strings "inf", "-inf", "nan".
class JsonValue {
 public:
  JsonValue() : kind_(Kind::null) {}
  JsonValue(bool b) : kind_(Kind::boolean), bool_(b) {}
  JsonValue(double x) : kind_(Kind::number), num_(x) {}
  JsonValue(int i) : kind_(Kind::integer), int_(i) {}
  JsonValue(std::int64_t i) : kind_(Kind::integer), int_(i) {}
  JsonValue(std::uint64_t u) : kind_(Kind::unsigned_integer), uint_(u) {}
  JsonValue(const char* s) : kind_(Kind::string), str_(s) {}
  JsonValue(std::string s) : kind_(Kind::string), str_(std::move(s)) {}

  static JsonValue array();
  static JsonValue object();

  // Object field access; creates the field (and converts null to
  // object) on first use.
  JsonValue& operator[](const std::string& key);

  // Array append; converts null to array on first use.
  void push_back(JsonValue v);

  // Compact single-line encoding.
  std::string encode() const;

  // Two-space indented encoding with a trailing newline.
  std::string pretty() const;

 private:
  enum class Kind { null, boolean, number, integer, unsigned_integer, string, array, object };

  void write(std::string& out, int indent, bool pretty) const;

  Kind kind_;
  bool bool_ = false;
  double num_ = 0.0;
  std::int64_t int_ = 0;
  std::uint64_t uint_ = 0;
  std::string str_;
  std::vector<JsonValue> items_;
  std::map<std::string, JsonValue> fields_;
};

// %.17g, round-trip exact for doubles.
std::string format_double(double x);

}  // namespace quasicut
