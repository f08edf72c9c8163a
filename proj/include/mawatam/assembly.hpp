#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "mawatam/maze.hpp"
#include "mawatam/tile.hpp"

namespace mawatam {

enum class MatchMode { permissive, strict };

struct Placement {
  Coord pos;
  std::uint32_t tile;  // index into Assembly::palette()
};

/// Seed plus placed tiles, with the order in which tiles were placed.
class Assembly {
 public:
  explicit Assembly(std::shared_ptr<const Maze> maze);

  const Maze& maze() const { return *maze_; }
  const std::shared_ptr<const Maze>& maze_ptr() const { return maze_; }

  const TileType* tile_at(Coord c) const;
  bool occupied(Coord c) const { return maze_->has_cell(c) || placed_.count(c) != 0; }

  // Glue presented towards `pos` by whatever occupies the neighbour across `side`.
  GlueLabel exposed_glue(Coord pos, Side side) const;

  const std::vector<Placement>& trace() const { return trace_; }
  const std::vector<TileType>& palette() const { return palette_; }
  const TileType& tile_of(const Placement& p) const { return palette_[p.tile]; }
  std::size_t size() const { return trace_.size(); }

  // Unchecked placement; use attach() for the checked rule.
  void place(Coord c, const TileType& t);

  friend bool same_tiles(const Assembly& a, const Assembly& b);

 private:
  std::shared_ptr<const Maze> maze_;
  std::vector<TileType> palette_;
  std::unordered_map<Coord, std::uint32_t, CoordHash> placed_;
  std::vector<Placement> trace_;
};

// Number of sides on which `t` at `pos` binds to an exposed glue, and whether
// any side has two unequal non-null glues.
struct BondCheck {
  int bonds = 0;
  bool mismatch = false;
};
BondCheck check_bonds(const Assembly& a, Coord pos, const TileType& t);

// Tile types (in tile-set order) that may attach at an empty position.
std::vector<const TileType*> attachable_tiles(const Assembly& a, Coord pos, const TileSet& ts,
                                              MatchMode mode = MatchMode::permissive);

// Checked attachment: throws occupied-position, insufficient-bonds or
// strict-mode-mismatch.
Assembly attach(const Assembly& a, Coord pos, const TileType& t,
                MatchMode mode = MatchMode::permissive);

// Empty positions (sorted, raster order) that admit at least one tile.
std::vector<Coord> frontier(const Assembly& a, const TileSet& ts,
                            MatchMode mode = MatchMode::permissive);

// Placed-tile glue if a tile abuts the edge, else the seed glue, else null.
GlueLabel glue_at(const Assembly& a, EdgeSite e);

}  // namespace mawatam
