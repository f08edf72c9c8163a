#include "mawatam/geometry.hpp"

#include <algorithm>

namespace mawatam {

char side_char(Side s) { return "NESW"[index(s)]; }

std::optional<Side> parse_side(std::string_view t) {
  if (t == "N") return Side::N;
  if (t == "E") return Side::E;
  if (t == "S") return Side::S;
  if (t == "W") return Side::W;
  return std::nullopt;
}

EdgeSite::EdgeSite(Coord cell, Side side) {
  switch (side) {
    case Side::S: cell_ = cell.step(Side::S); side_ = Side::N; break;
    case Side::W: cell_ = cell.step(Side::W); side_ = Side::E; break;
    default: cell_ = cell; side_ = side; break;
  }
}

std::optional<Side> EdgeSite::side_of(Coord c) const {
  if (c == cell_) return side_;
  if (c == neighbour()) return opposite(side_);
  return std::nullopt;
}

void Bounds::include(Coord c) {
  if (empty()) {
    min_x = max_x = c.x;
    min_y = max_y = c.y;
    return;
  }
  min_x = std::min(min_x, c.x);
  max_x = std::max(max_x, c.x);
  min_y = std::min(min_y, c.y);
  max_y = std::max(max_y, c.y);
}

}  // namespace mawatam
