#include "mawatam/error.hpp"

namespace mawatam {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::parse_error: return "parse-error";
    case Errc::duplicate_tile_name: return "duplicate-tile-name";
    case Errc::invalid_maze: return "invalid-maze";
    case Errc::occupied_position: return "occupied-position";
    case Errc::insufficient_bonds: return "insufficient-bonds";
    case Errc::glue_mismatch: return "strict-mode-mismatch";
    case Errc::step_budget_exceeded: return "step-budget-exceeded";
    case Errc::validation_failure: return "validation-failure";
    case Errc::overlap: return "overlap";
    case Errc::undefined_signal: return "undefined-signal";
    case Errc::cycle_detected: return "cycle-detected";
    case Errc::arity_violation: return "arity-violation";
    case Errc::length_mismatch: return "length-mismatch";
    case Errc::unroutable: return "unroutable";
    case Errc::output_not_reached: return "output-not-reached";
    case Errc::non_digit_glue: return "non-digit-glue";
    case Errc::rect_not_fully_tiled: return "rect-not-fully-tiled";
    case Errc::nondeterminism: return "nondeterminism";
    case Errc::file_not_found: return "file-not-found";
    case Errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace mawatam
