#include "quasicut/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "quasicut/errors.hpp"

namespace quasicut {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const std::string& tok, int line, const char* what) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw Error(Errc::syntax, std::string("expected an integer ") + what, line);
  }
  if (used != tok.size())
    throw Error(Errc::syntax, std::string("expected an integer ") + what, line);
  return value;
}

double parse_number(const std::string& tok, int line, const char* what) {
  size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw Error(Errc::syntax, std::string("expected a number ") + what, line);
  }
  if (used != tok.size())
    throw Error(Errc::syntax, std::string("expected a number ") + what, line);
  return value;
}

}  // namespace

WeightedDigraph parse_graph_file(const std::string& text) {
  int n = -1;
  std::vector<Edge> edges;
  std::vector<std::vector<char>> seen;
  for (const Line& line : tokenize(text)) {
    const std::string& head = line.tokens.front();
    if (head == "n") {
      if (n >= 0) throw Error(Errc::syntax, "duplicate n line", line.number);
      if (line.tokens.size() != 2)
        throw Error(Errc::syntax, "expected: n <count>", line.number);
      n = parse_int(line.tokens[1], line.number, "vertex count");
      if (n <= 0) throw Error(Errc::syntax, "vertex count must be positive", line.number);
      seen.assign(n, std::vector<char>(n, 0));
    } else if (head == "e") {
      if (n < 0) throw Error(Errc::syntax, "e line before n line", line.number);
      if (line.tokens.size() != 4)
        throw Error(Errc::syntax, "expected: e <u> <v> <w>", line.number);
      const int u = parse_int(line.tokens[1], line.number, "tail vertex");
      const int v = parse_int(line.tokens[2], line.number, "head vertex");
      const double w = parse_number(line.tokens[3], line.number, "edge weight");
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw Error(Errc::bad_vertex_id, "edge endpoint out of range", line.number);
      if (u == v)
        throw Error(Errc::bad_vertex_id, "self-loops are not allowed", line.number);
      if (!(w >= 0.0) || !std::isfinite(w))
        throw Error(Errc::syntax, "edge weight must be non-negative and finite", line.number);
      if (seen[u][v])
        throw Error(Errc::duplicate_edge, "duplicate directed edge", line.number);
      seen[u][v] = 1;
      edges.push_back({u, v, w});
    } else {
      throw Error(Errc::syntax, "unknown directive '" + head + "'", line.number);
    }
  }
  if (n < 0) throw Error(Errc::syntax, "missing n line");
  return WeightedDigraph(n, std::move(edges));
}

std::vector<DemandPair> parse_pairs_file(const std::string& text) {
  std::vector<DemandPair> pairs;
  for (const Line& line : tokenize(text)) {
    if (line.tokens.front() != "t")
      throw Error(Errc::syntax, "unknown directive '" + line.tokens.front() + "'",
                  line.number);
    if (line.tokens.size() != 4)
      throw Error(Errc::syntax, "expected: t <s> <t> <dem>", line.number);
    DemandPair p;
    p.source = parse_int(line.tokens[1], line.number, "source vertex");
    p.sink = parse_int(line.tokens[2], line.number, "sink vertex");
    p.demand = parse_number(line.tokens[3], line.number, "demand");
    if (p.source == p.sink)
      throw Error(Errc::same_endpoints, "pair endpoints must differ", line.number);
    if (p.source < 0 || p.sink < 0)
      throw Error(Errc::bad_vertex_id, "pair endpoint out of range", line.number);
    if (!(p.demand > 0.0) || !std::isfinite(p.demand))
      throw Error(Errc::syntax, "demand must be positive and finite", line.number);
    pairs.push_back(p);
  }
  if (pairs.empty()) throw Error(Errc::syntax, "no t lines found");
  return pairs;
}

TreeDecomposition parse_decomposition_file(const std::string& text, int n) {
  std::map<int, std::vector<int>> bags;
  std::vector<std::pair<int, int>> links;
  for (const Line& line : tokenize(text)) {
    const std::string& head = line.tokens.front();
    if (head == "b") {
      if (line.tokens.size() < 2)
        throw Error(Errc::syntax, "expected: b <id> <v...>", line.number);
      const int id = parse_int(line.tokens[1], line.number, "bag id");
      if (id < 0) throw Error(Errc::syntax, "bag id must be non-negative", line.number);
      if (bags.count(id)) throw Error(Errc::syntax, "duplicate bag id", line.number);
      std::vector<int> bag;
      for (size_t i = 2; i < line.tokens.size(); ++i) {
        const int v = parse_int(line.tokens[i], line.number, "bag vertex");
        if (v < 0 || v >= n)
          throw Error(Errc::bad_vertex_id, "bag vertex out of range", line.number);
        bag.push_back(v);
      }
      bags[id] = std::move(bag);
    } else if (head == "link") {
      if (line.tokens.size() != 3)
        throw Error(Errc::syntax, "expected: link <id> <id>", line.number);
      links.emplace_back(parse_int(line.tokens[1], line.number, "bag id"),
                         parse_int(line.tokens[2], line.number, "bag id"));
    } else {
      throw Error(Errc::syntax, "unknown directive '" + head + "'", line.number);
    }
  }
  if (bags.empty()) throw Error(Errc::syntax, "no bags found");

  TreeDecomposition td;
  const int nb = static_cast<int>(bags.size());
  for (int id = 0; id < nb; ++id) {
    auto it = bags.find(id);
    if (it == bags.end())
      throw Error(Errc::syntax, "bag ids must be 0.." + std::to_string(nb - 1));
    td.bags.push_back(it->second);
  }
  for (const auto& [a, b] : links) {
    if (a < 0 || a >= nb || b < 0 || b >= nb)
      throw Error(Errc::syntax, "link references a missing bag id");
    td.tree_edges.emplace_back(a, b);
  }
  return td;
}

std::string emit_graph_file(const WeightedDigraph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges())
    out += "e " + std::to_string(e.tail) + " " + std::to_string(e.head) + " " +
           format_double(e.weight) + "\n";
  return out;
}

std::string emit_pairs_file(const std::vector<DemandPair>& pairs) {
  std::string out;
  for (const DemandPair& p : pairs)
    out += "t " + std::to_string(p.source) + " " + std::to_string(p.sink) + " " +
           format_double(p.demand) + "\n";
  return out;
}

std::string emit_decomposition_file(const TreeDecomposition& td) {
  std::string out;
  for (size_t i = 0; i < td.bags.size(); ++i) {
    out += "b " + std::to_string(i);
    for (int v : td.bags[i]) out += " " + std::to_string(v);
    out += "\n";
  }
  for (const auto& [a, b] : td.tree_edges)
    out += "link " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::invalid_input, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_input, "cannot write file: " + path);
  out << text;
  if (!out) throw Error(Errc::invalid_input, "write failed: " + path);
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

JsonValue JsonValue::array() {
  JsonValue v;
  v.kind_ = Kind::array;
  return v;
}

JsonValue JsonValue::object() {
  JsonValue v;
  v.kind_ = Kind::object;
  return v;
}

JsonValue& JsonValue::operator[](const std::string& key) {
  if (kind_ == Kind::null) kind_ = Kind::object;
  if (kind_ != Kind::object) throw Error(Errc::internal, "JSON field access on non-object");
  return fields_[key];
}

void JsonValue::push_back(JsonValue v) {
  if (kind_ == Kind::null) kind_ = Kind::array;
  if (kind_ != Kind::array) throw Error(Errc::internal, "JSON append on non-array");
  items_.push_back(std::move(v));
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

void JsonValue::write(std::string& out, int indent, bool pretty) const {
  const std::string pad = pretty ? std::string(2 * indent, ' ') : "";
  const std::string inner_pad = pretty ? std::string(2 * (indent + 1), ' ') : "";
  const char* nl = pretty ? "\n" : "";
  switch (kind_) {
    case Kind::null: out += "null"; break;
    case Kind::boolean: out += bool_ ? "true" : "false"; break;
    case Kind::integer: out += std::to_string(int_); break;
    case Kind::unsigned_integer: out += std::to_string(uint_); break;
    case Kind::number:
      // Non-finite numbers have no JSON encoding; use strings.
      if (std::isfinite(num_)) out += format_double(num_);
      else write_escaped(out, format_double(num_));
      break;
    case Kind::string: write_escaped(out, str_); break;
    case Kind::array: {
      if (items_.empty()) { out += "[]"; break; }
      out += "[";
      out += nl;
      for (size_t i = 0; i < items_.size(); ++i) {
        out += inner_pad;
        items_[i].write(out, indent + 1, pretty);
        if (i + 1 < items_.size()) out += ",";
        out += nl;
      }
      out += pad;
      out += "]";
      break;
    }
    case Kind::object: {
      if (fields_.empty()) { out += "{}"; break; }
      out += "{";
      out += nl;
      size_t i = 0;
      for (const auto& [key, value] : fields_) {
        out += inner_pad;
        write_escaped(out, key);
        out += pretty ? ": " : ":";
        value.write(out, indent + 1, pretty);
        if (++i < fields_.size()) out += ",";
        out += nl;
      }
      out += pad;
      out += "}";
      break;
    }
  }
}

std::string JsonValue::encode() const {
  std::string out;
  write(out, 0, false);
  return out;
}

std::string JsonValue::pretty() const {
  std::string out;
  write(out, 0, true);
  out += "\n";
  return out;
}

}  // namespace quasicut
