#include "mawatam/tile.hpp"

#include <algorithm>
#include <set>

#include "mawatam/error.hpp"

namespace mawatam {

GlueLabel::GlueLabel(std::string text) : text_(std::move(text)) {
  if (text_.empty()) text_ = "-";
}

TileType make_tile(std::string name, GlueLabel n, GlueLabel e, GlueLabel s, GlueLabel w) {
  return TileType{std::move(name), {std::move(n), std::move(e), std::move(s), std::move(w)}};
}

TileSet::TileSet(std::string name, std::vector<TileType> tiles)
    : name_(std::move(name)), tiles_(std::move(tiles)) {
  std::set<std::string> seen;
  for (const auto& t : tiles_) {
    if (t.name.empty()) throw Error(Errc::parse_error, "tile with empty name");
    if (!seen.insert(t.name).second) throw Error(Errc::duplicate_tile_name, t.name);
  }
}

const TileType* TileSet::find(std::string_view tile_name) const {
  auto it = std::find_if(tiles_.begin(), tiles_.end(),
                         [&](const TileType& t) { return t.name == tile_name; });
  return it == tiles_.end() ? nullptr : &*it;
}

const TileType& TileSet::at(std::string_view tile_name) const {
  if (const auto* t = find(tile_name)) return *t;
  throw Error(Errc::invalid_argument, "no tile named '" + std::string(tile_name) + "'");
}

std::vector<GlueLabel> TileSet::alphabet() const {
  std::set<GlueLabel> labels;
  for (const auto& t : tiles_)
    for (const auto& g : t.glues)
      if (!g.is_null()) labels.insert(g);
  return {labels.begin(), labels.end()};
}

}  // namespace mawatam
