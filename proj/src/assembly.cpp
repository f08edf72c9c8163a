#include "mawatam/assembly.hpp"

#include <algorithm>
#include <set>

#include "mawatam/error.hpp"

namespace mawatam {

Assembly::Assembly(std::shared_ptr<const Maze> maze) : maze_(std::move(maze)) {
  if (!maze_) maze_ = std::make_shared<Maze>();
}

const TileType* Assembly::tile_at(Coord c) const {
  auto it = placed_.find(c);
  return it == placed_.end() ? nullptr : &palette_[it->second];
}

GlueLabel Assembly::exposed_glue(Coord pos, Side side) const {
  Coord n = pos.step(side);
  if (const auto* t = tile_at(n)) return t->glue(opposite(side));
  if (maze_->has_cell(n)) return maze_->glue(n, opposite(side));
  return GlueLabel::null();
}

void Assembly::place(Coord c, const TileType& t) {
  auto it = std::find(palette_.begin(), palette_.end(), t);
  auto idx = static_cast<std::uint32_t>(it - palette_.begin());
  if (it == palette_.end()) palette_.push_back(t);
  placed_[c] = idx;
  trace_.push_back({c, idx});
}

bool same_tiles(const Assembly& a, const Assembly& b) {
  if (a.placed_.size() != b.placed_.size()) return false;
  for (const auto& [c, i] : a.placed_) {
    const auto* tb = b.tile_at(c);
    if (!tb || tb->name != a.palette_[i].name) return false;
  }
  return true;
}

BondCheck check_bonds(const Assembly& a, Coord pos, const TileType& t) {
  BondCheck r;
  for (Side s : kSides) {
    GlueLabel g = a.exposed_glue(pos, s);
    const GlueLabel& mine = t.glue(s);
    if (mine.binds(g)) ++r.bonds;
    else if (!mine.is_null() && !g.is_null()) r.mismatch = true;
  }
  return r;
}

std::vector<const TileType*> attachable_tiles(const Assembly& a, Coord pos, const TileSet& ts,
                                              MatchMode mode) {
  std::vector<const TileType*> out;
  if (a.occupied(pos)) return out;
  for (const auto& t : ts.tiles()) {
    auto bc = check_bonds(a, pos, t);
    if (bc.bonds >= 2 && !(mode == MatchMode::strict && bc.mismatch)) out.push_back(&t);
  }
  return out;
}

Assembly attach(const Assembly& a, Coord pos, const TileType& t, MatchMode mode) {
  if (a.occupied(pos)) throw Error(Errc::occupied_position, t.name);
  auto bc = check_bonds(a, pos, t);
  if (bc.bonds < 2) throw Error(Errc::insufficient_bonds, t.name);
  if (mode == MatchMode::strict && bc.mismatch) throw Error(Errc::glue_mismatch, t.name);
  Assembly out = a;
  out.place(pos, t);
  return out;
}

std::vector<Coord> frontier(const Assembly& a, const TileSet& ts, MatchMode mode) {
  std::set<Coord> probe;
  auto around = [&](Coord c) {
    for (Side s : kSides) probe.insert(c.step(s));
  };
  for (auto c : a.maze().cells()) around(c);
  for (const auto& p : a.trace()) around(p.pos);
  std::vector<Coord> out;
  for (auto c : probe)
    if (!attachable_tiles(a, c, ts, mode).empty()) out.push_back(c);
  return out;
}

GlueLabel glue_at(const Assembly& a, EdgeSite e) {
  const TileType* t1 = a.tile_at(e.cell());
  const TileType* t2 = a.tile_at(e.neighbour());
  if (t1 && !t1->glue(e.side()).is_null()) return t1->glue(e.side());
  if (t2 && !t2->glue(opposite(e.side())).is_null()) return t2->glue(opposite(e.side()));
  if (t1 || t2) return GlueLabel::null();
  return a.maze().glue_on_edge(e);
}

}  // namespace mawatam
