#include "mawatam/tilesets.hpp"

#include "mawatam/error.hpp"
#include "mawatam/formats.hpp"

namespace mawatam {

TileSet nand_nxor() {
  std::vector<TileType> tiles;
  for (int n = 0; n <= 1; ++n)
    for (int e = 0; e <= 1; ++e) {
      int s = !(n && e);
      int w = n == e;
      tiles.push_back(make_tile(std::to_string(n) + std::to_string(e), std::to_string(n),
                                std::to_string(e), std::to_string(s), std::to_string(w)));
    }
  return TileSet("nand-nxor", std::move(tiles));
}

TileSet collatz(bool extended) {
  std::vector<TileType> tiles;
  for (int x = 0; x < 6; ++x)
    tiles.push_back(make_tile(std::to_string(x), std::to_string(x / 3), std::to_string(x % 3),
                              std::to_string(x % 2), std::to_string(x / 2)));
  if (extended) {
    // A bit arriving from the north next to the marker column: 0 passes the
    // marker on, 1 emits digit 2 (the carry of 3x+1) and both leave S=0.
    tiles.push_back(make_tile("s0", "0", "S", "0", "S"));
    tiles.push_back(make_tile("s1", "1", "S", "0", "2"));
  }
  return TileSet(extended ? "collatz-ext" : "collatz", std::move(tiles));
}

TileSet tileset_by_id(const std::string& id) {
  if (id == "nand-nxor") return nand_nxor();
  if (id == "collatz") return collatz(false);
  if (id == "collatz-ext") return collatz(true);
  if (id.rfind("file:", 0) == 0) return load_tileset(read_file(id.substr(5)), id.substr(5));
  throw Error(Errc::invalid_argument, "unknown tile set '" + id + "'");
}

ProbeResult unique_tile_for(const TileSet& ts, const SidePairProbe& probe) {
  ProbeResult r;
  int hits = 0;
  for (const auto& t : ts.tiles()) {
    if (t.glue(probe.first).binds(probe.a) && t.glue(probe.second).binds(probe.b)) {
      if (++hits == 1) r.tile = t;
    }
  }
  if (hits != 1) r.tile.reset();
  r.violation = hits >= 2;
  return r;
}

}  // namespace mawatam
