#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mawatam/geometry.hpp"

namespace mawatam {

/// A glue label; "-" is the null glue and never binds.
class GlueLabel {
 public:
  GlueLabel() : text_("-") {}
  GlueLabel(std::string text);  // NOLINT(google-explicit-constructor): labels read like strings
  GlueLabel(const char* text) : GlueLabel(std::string(text)) {}

  static GlueLabel null() { return {}; }

  bool is_null() const { return text_ == "-"; }
  const std::string& str() const { return text_; }

  // Two glues bind iff both are non-null and equal.
  bool binds(const GlueLabel& other) const { return !is_null() && text_ == other.text_; }

  friend bool operator==(const GlueLabel&, const GlueLabel&) = default;
  friend auto operator<=>(const GlueLabel&, const GlueLabel&) = default;

 private:
  std::string text_;
};

struct TileType {
  std::string name;
  std::array<GlueLabel, 4> glues;  // indexed by Side

  const GlueLabel& glue(Side s) const { return glues[index(s)]; }

  friend bool operator==(const TileType&, const TileType&) = default;
};

TileType make_tile(std::string name, GlueLabel n, GlueLabel e, GlueLabel s, GlueLabel w);

class TileSet {
 public:
  TileSet() = default;
  TileSet(std::string name, std::vector<TileType> tiles);  // throws duplicate-tile-name

  const std::string& name() const { return name_; }
  const std::vector<TileType>& tiles() const { return tiles_; }
  std::size_t size() const { return tiles_.size(); }

  const TileType* find(std::string_view tile_name) const;
  const TileType& at(std::string_view tile_name) const;  // throws invalid-argument

  // All non-null labels used by the tile set, sorted.
  std::vector<GlueLabel> alphabet() const;

 private:
  std::string name_;
  std::vector<TileType> tiles_;
};

}  // namespace mawatam
