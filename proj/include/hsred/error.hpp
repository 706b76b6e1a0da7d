#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hsred {

enum class ErrorCode {
  dimension_overflow,
  empty_sector,
  invalid_argument,
  length_mismatch,
  out_of_range,
  empty_keep,
  dimension_too_small,
  dimension_guard,
  no_convergence,
  no_root,
  bracket_failure,
  division_guard,
  norm_violation,
  no_crossing,
  empty_window,
  config_parse,
  unknown_command,
  io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Base exception for every failure raised by the library. The code is stable
// and is what the CLI reports in its error JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Lanczos ran out of iterations; carries the best residuals reached.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, std::vector<double> residuals)
      : Error(ErrorCode::no_convergence, what), residuals_(std::move(residuals)) {}

  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<double> residuals_;
};

}  // namespace hsred
