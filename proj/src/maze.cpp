#include "mawatam/maze.hpp"

#include "mawatam/error.hpp"

namespace mawatam {

namespace {
std::string where(Coord c, Side s) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + "," + side_char(s) + ")";
}
}  // namespace

void Maze::remove_cell(Coord c) {
  cells_.erase(c);
  for (Side s : kSides) glues_.erase(SeedSide{c, s});
}

void Maze::set_glue(Coord cell, Side side, const GlueLabel& g) {
  if (g.is_null()) return;
  auto [it, inserted] = glues_.emplace(SeedSide{cell, side}, g);
  if (!inserted && it->second != g)
    throw Error(Errc::overlap, "conflicting glues " + it->second.str() + " and " + g.str() +
                                   " at " + where(cell, side));
}

GlueLabel Maze::glue(Coord cell, Side side) const {
  auto it = glues_.find(SeedSide{cell, side});
  return it == glues_.end() ? GlueLabel::null() : it->second;
}

GlueLabel Maze::glue_on_edge(EdgeSite e) const {
  if (has_cell(e.cell())) return glue(e.cell(), e.side());
  if (has_cell(e.neighbour())) return glue(e.neighbour(), opposite(e.side()));
  return GlueLabel::null();
}

Bounds Maze::bounds() const {
  Bounds b;
  for (auto c : cells_) b.include(c);
  for (auto c : inputs_) b.include(c);
  return b;
}

void Maze::merge(const Maze& other, Coord offset) {
  for (auto c : other.cells_) cells_.insert(c + offset);
  for (const auto& [k, g] : other.glues_) set_glue(k.cell + offset, k.side, g);
  for (auto c : other.inputs_) inputs_.push_back(c + offset);
  for (const auto& [c, t] : other.input_tiles_) input_tiles_[c + offset] = t;
}

void Maze::validate() const {
  for (const auto& [k, g] : glues_) {
    if (!has_cell(k.cell))
      throw Error(Errc::invalid_maze, "glue on unoccupied cell " + where(k.cell, k.side));
    if (has_cell(k.cell.step(k.side)))
      throw Error(Errc::invalid_maze, "glue on interior edge " + where(k.cell, k.side));
  }
  for (auto c : inputs_)
    if (has_cell(c))
      throw Error(Errc::invalid_maze,
                  "input site (" + std::to_string(c.x) + "," + std::to_string(c.y) + ") is occupied");
}

}  // namespace mawatam
