#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mawatam {

enum class Errc {
  parse_error,
  duplicate_tile_name,
  invalid_maze,
  occupied_position,
  insufficient_bonds,
  glue_mismatch,
  step_budget_exceeded,
  validation_failure,
  overlap,
  undefined_signal,
  cycle_detected,
  arity_violation,
  length_mismatch,
  unroutable,
  output_not_reached,
  non_digit_glue,
  rect_not_fully_tiled,
  nondeterminism,
  file_not_found,
  invalid_argument,
};

std::string_view errc_name(Errc code) noexcept;

/// Domain error carrying a machine-checkable code. The message names the case.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mawatam
