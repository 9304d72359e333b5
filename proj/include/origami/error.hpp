#pragma once

#include <stdexcept>
#include <string>

namespace origami {

enum class ErrorCode {
  malformed_cycles,
  label_out_of_range,
  not_a_bijection,
  not_transitive,
  size_mismatch,
  invalid_argument,
  orbit_overflow,
  disconnected_cover,
  not_a_covering,
  unsupported_stratum,
  inconsistent_spectrum,
  validation_failed,
  internal,
};

const char* to_string(ErrorCode code);

/// Domain error carrying a stable code; the CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace origami
