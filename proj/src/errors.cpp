#include "quasicut/errors.hpp"

namespace quasicut {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_input: return "InvalidInput";
    case Errc::not_a_tree: return "NotATree";
    case Errc::not_a_dag: return "NotADag";
    case Errc::z_out_of_range: return "ZOutOfRange";
    case Errc::separator_not_found: return "SeparatorNotFound";
    case Errc::invalid_decomposition: return "InvalidDecomposition";
    case Errc::separator_failure: return "SeparatorFailure";
    case Errc::degenerate_space: return "DegenerateSpace";
    case Errc::scale_mismatch: return "ScaleMismatch";
    case Errc::not_a_quasiultrametric: return "NotAQuasiUltrametric";
    case Errc::infeasible: return "Infeasible";
    case Errc::unbounded: return "Unbounded";
    case Errc::cycle_suspected: return "CycleSuspected";
    case Errc::too_large: return "TooLarge";
    case Errc::no_separating_candidate: return "NoSeparatingCandidate";
    case Errc::non_progress: return "NonProgress";
    case Errc::syntax: return "Syntax";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::bad_vertex_id: return "BadVertexId";
    case Errc::same_endpoints: return "SameEndpoints";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

bool is_input_error(Errc c) {
  switch (c) {
    case Errc::invalid_input:
    case Errc::not_a_tree:
    case Errc::not_a_dag:
    case Errc::z_out_of_range:
    case Errc::separator_not_found:
    case Errc::invalid_decomposition:
    case Errc::degenerate_space:
    case Errc::infeasible:
    case Errc::unbounded:
    case Errc::too_large:
    case Errc::syntax:
    case Errc::duplicate_edge:
    case Errc::bad_vertex_id:
    case Errc::same_endpoints:
      return true;
    default:
      return false;
  }
}

}  // namespace quasicut
