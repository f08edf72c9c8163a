#pragma once

#include <set>
#include <string>

#include "mawatam/assembly.hpp"

namespace mawatam {

enum class RenderFormat { ascii, svg };

struct RenderOptions {
  RenderFormat format = RenderFormat::ascii;
  int cell_size = 24;  // svg pixels per cell, at least 4
  bool show_glues = false;
  std::set<Coord> highlight;
};

// ascii: one glyph per cell of the bounding box, north row first; '#' seed,
// first letter of the tile name for tiles, '.' empty. svg: standalone document.
std::string render(const Assembly& a, const RenderOptions& opt = {});

}  // namespace mawatam
