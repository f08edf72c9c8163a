#pragma once

#include <optional>
#include <string>

#include "mawatam/tile.hpp"

namespace mawatam {

// Four tiles indexed by (N,E): S = NAND(N,E), W = NXOR(N,E). Named "<N><E>".
TileSet nand_nxor();

// Tiles "0".."5" with N = x div 3, E = x mod 3, W = x div 2, S = x mod 2.
// The extended set adds "s0" and "s1", which consume the "S" marker column of
// the trajectory seed.
TileSet collatz(bool extended = false);

// "nand-nxor", "collatz", "collatz-ext" or "file:PATH".
TileSet tileset_by_id(const std::string& id);

struct SidePairProbe {
  Side first;
  Side second;
  GlueLabel a;  // glue on `first`
  GlueLabel b;  // glue on `second`
};

struct ProbeResult {
  std::optional<TileType> tile;  // set iff exactly one tile matches
  bool violation = false;        // two or more tiles match
};

ProbeResult unique_tile_for(const TileSet& ts, const SidePairProbe& probe);

}  // namespace mawatam
