#include "origami/error.hpp"

namespace origami {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_cycles: return "malformed_cycles";
    case ErrorCode::label_out_of_range: return "label_out_of_range";
    case ErrorCode::not_a_bijection: return "not_a_bijection";
    case ErrorCode::not_transitive: return "not_transitive";
    case ErrorCode::size_mismatch: return "size_mismatch";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::orbit_overflow: return "orbit_overflow";
    case ErrorCode::disconnected_cover: return "disconnected_cover";
    case ErrorCode::not_a_covering: return "not_a_covering";
    case ErrorCode::unsupported_stratum: return "unsupported_stratum";
    case ErrorCode::inconsistent_spectrum: return "inconsistent_spectrum";
    case ErrorCode::validation_failed: return "validation_failed";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace origami
