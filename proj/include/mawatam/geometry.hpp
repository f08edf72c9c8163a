#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace mawatam {

// x grows east, y grows north.
enum class Side : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

inline constexpr std::array<Side, 4> kSides{Side::N, Side::E, Side::S, Side::W};

constexpr Side opposite(Side s) { return static_cast<Side>((static_cast<int>(s) + 2) % 4); }
constexpr int index(Side s) { return static_cast<int>(s); }

char side_char(Side s);
std::optional<Side> parse_side(std::string_view text);

struct Coord {
  int x = 0;
  int y = 0;

  constexpr Coord step(Side s) const {
    switch (s) {
      case Side::N: return {x, y + 1};
      case Side::E: return {x + 1, y};
      case Side::S: return {x, y - 1};
      case Side::W: return {x - 1, y};
    }
    return *this;
  }
  constexpr Coord operator+(Coord o) const { return {x + o.x, y + o.y}; }

  // Lexicographic (x, then y) -- the raster order used by the default policy.
  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

struct CoordHash {
  std::size_t operator()(const Coord& c) const noexcept {
    auto ux = static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x));
    auto uy = static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.y));
    std::uint64_t h = (ux << 32) ^ uy;
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }
};

/// A unit edge of the grid. Always stored canonically as the N or E side of a
/// cell, so (x,y,N) == (x,y+1,S) and (x,y,E) == (x+1,y,W).
class EdgeSite {
 public:
  EdgeSite() = default;
  EdgeSite(Coord cell, Side side);

  Coord cell() const { return cell_; }
  Side side() const { return side_; }

  // The two cells sharing this edge: cell() and its neighbour across side().
  Coord neighbour() const { return cell_.step(side_); }

  // Express the edge as a side of the given cell (which must be one of its two cells).
  std::optional<Side> side_of(Coord c) const;

  friend auto operator<=>(const EdgeSite&, const EdgeSite&) = default;

 private:
  Coord cell_{};
  Side side_ = Side::N;
};

struct Bounds {
  int min_x = 0, min_y = 0, max_x = -1, max_y = -1;

  bool empty() const { return max_x < min_x || max_y < min_y; }
  bool contains(Coord c) const {
    return c.x >= min_x && c.x <= max_x && c.y >= min_y && c.y <= max_y;
  }
  int width() const { return empty() ? 0 : max_x - min_x + 1; }
  int height() const { return empty() ? 0 : max_y - min_y + 1; }
  void include(Coord c);
};

}  // namespace mawatam
