#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mawatam/gadget.hpp"

namespace mawatam {

// Where the inputs of a searched w×h rectangle (cells x∈[0,w-1], y∈[0,h-1]) enter.
enum class GateConvention {
  east,    // all inputs from the east: x at row h-1, y at row h-3
  native,  // x from the north into (w-1,h-1), y from the east into (w-1,h-1)
};

struct SearchStats {
  std::size_t candidates = 0;  // boundary assignments tried
  std::size_t runs = 0;        // simulations
  std::size_t solutions = 0;
};

// Every boundary-glue assignment of a w×h rectangle realising `table` (length
// 1, 2 or 4 for 0, 1 or 2 inputs) at the W side of some west-column cell, in
// enumeration order. Boundary cells surround the rectangle on N, S and E; their
// glues facing the rectangle range over the tile set's alphabet for that side.
// `visit` returns false to stop early.
void enumerate_gate_seeds(const TileSet& ts, const std::string& tileset_id, const std::string& table,
                          int w, int h, GateConvention conv,
                          const std::function<bool(const Gadget&)>& visit, SearchStats* stats = nullptr);

// Smallest (by tile count, then area) seed within the bounds, or none.
std::optional<Gadget> search_gate_seed(const TileSet& ts, const std::string& tileset_id,
                                       const std::string& table, int max_w, int max_h,
                                       GateConvention conv = GateConvention::east,
                                       SearchStats* stats = nullptr);

// Number of boundary glue slots on which two same-shaped seeds differ.
int glue_distance(const Gadget& a, const Gadget& b);

}  // namespace mawatam
