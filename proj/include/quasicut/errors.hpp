#pragma once

#include <stdexcept>
#include <string>

namespace quasicut {

enum class Errc {
  invalid_input,
  not_a_tree,
  not_a_dag,
  z_out_of_range,
  separator_not_found,
  invalid_decomposition,
  separator_failure,
  degenerate_space,
  scale_mismatch,
  not_a_quasiultrametric,
  infeasible,
  unbounded,
  cycle_suspected,
  too_large,
  no_separating_candidate,
  non_progress,
  syntax,
  duplicate_edge,
  bad_vertex_id,
  same_endpoints,
  internal,
};

// line is 1-based for parse errors, -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, int line = -1)
      : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        code(code),
        line(line) {}

  Errc code;
  int line;
};

const char* errc_name(Errc c);

// Input errors map to CLI exit code 1, everything else to 2.
bool is_input_error(Errc c);

}  // namespace quasicut
