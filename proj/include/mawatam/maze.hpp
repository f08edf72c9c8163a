#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mawatam/geometry.hpp"
#include "mawatam/tile.hpp"

namespace mawatam {

/// A glue carried by one side of a seed cell.
struct SeedSide {
  Coord cell;
  Side side;
  friend auto operator<=>(const SeedSide&, const SeedSide&) = default;
};

/// The seed: a set of occupied cells (possibly many polyominoes) with glues on
/// their exterior sides, plus optional input sites and an output edge.
class Maze {
 public:
  void add_cell(Coord c) { cells_.insert(c); }
  void remove_cell(Coord c);
  bool has_cell(Coord c) const { return cells_.count(c) != 0; }
  const std::set<Coord>& cells() const { return cells_; }

  // Sets the glue on one side of a seed cell. Setting the same label twice is
  // fine; a different non-null label on the same side throws overlap.
  void set_glue(Coord cell, Side side, const GlueLabel& g);
  GlueLabel glue(Coord cell, Side side) const;
  const std::map<SeedSide, GlueLabel>& glues() const { return glues_; }

  // Glue exposed on an edge by a seed cell (null if none).
  GlueLabel glue_on_edge(EdgeSite e) const;

  void add_input_site(Coord c) { inputs_.push_back(c); }
  const std::vector<Coord>& input_sites() const { return inputs_; }
  void clear_input_sites() { inputs_.clear(); }

  void set_output_edge(EdgeSite e) { output_ = e; }
  const std::optional<EdgeSite>& output_edge() const { return output_; }

  // Input tiles that were written into the seed by encode_input (informational).
  void note_input_tile(Coord c, std::string tile) { input_tiles_[c] = std::move(tile); }
  const std::map<Coord, std::string>& input_tiles() const { return input_tiles_; }

  // Bounding box of cells and input sites.
  Bounds bounds() const;

  // Copies every cell and glue of `other` shifted by `offset`. Throws overlap on
  // conflicting glues; coincident cells are merged.
  void merge(const Maze& other, Coord offset = {});

  // Throws invalid-maze if a glue sits on an interior edge or a free cell, or an
  // input site is occupied.
  void validate() const;

 private:
  std::set<Coord> cells_;
  std::map<SeedSide, GlueLabel> glues_;
  std::vector<Coord> inputs_;
  std::optional<EdgeSite> output_;
  std::map<Coord, std::string> input_tiles_;
};

}  // namespace mawatam
