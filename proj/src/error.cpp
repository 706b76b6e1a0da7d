#include "hsred/error.hpp"

namespace hsred {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::dimension_overflow: return "dimension_overflow";
    case ErrorCode::empty_sector: return "empty_sector";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::length_mismatch: return "length_mismatch";
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::empty_keep: return "empty_keep";
    case ErrorCode::dimension_too_small: return "dimension_too_small";
    case ErrorCode::dimension_guard: return "dimension_guard";
    case ErrorCode::no_convergence: return "no_convergence";
    case ErrorCode::no_root: return "no_root";
    case ErrorCode::bracket_failure: return "bracket_failure";
    case ErrorCode::division_guard: return "division_guard";
    case ErrorCode::norm_violation: return "norm_violation";
    case ErrorCode::no_crossing: return "no_crossing";
    case ErrorCode::empty_window: return "empty_window";
    case ErrorCode::config_parse: return "config_parse";
    case ErrorCode::unknown_command: return "unknown_command";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

}  // namespace hsred
