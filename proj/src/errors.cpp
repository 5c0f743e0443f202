#include "slnrect/errors.hpp"

namespace slnrect {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::all_zero_input: return "AllZeroInput";
    case ErrorKind::resource_exceeded: return "ResourceExceeded";
    case ErrorKind::not_a_section: return "NotASection";
    case ErrorKind::not_unimodular: return "NotUnimodular";
    case ErrorKind::invalid_support: return "InvalidSupport";
    case ErrorKind::first_column_not_preserved: return "FirstColumnNotPreserved";
    case ErrorKind::size_mismatch: return "SizeMismatch";
    case ErrorKind::not_an_embedding: return "NotAnEmbedding";
    case ErrorKind::search_exhausted: return "SearchExhausted";
    case ErrorKind::precondition_failed: return "PreconditionFailed";
    case ErrorKind::division_obstruction: return "DivisionObstruction";
    case ErrorKind::unsupported_size: return "UnsupportedSize";
    case ErrorKind::divisibility_fails: return "DivisibilityFails";
    case ErrorKind::heuristic_failed: return "HeuristicFailed";
    case ErrorKind::degree_obstruction: return "DegreeObstruction";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::replay_mismatch: return "ReplayMismatch";
  }
  return "Unknown";
}

}  // namespace slnrect
