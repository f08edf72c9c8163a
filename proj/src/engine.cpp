#include "mawatam/engine.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <random>

#include "mawatam/error.hpp"

namespace mawatam {

Engine::Engine(const Maze& maze, const TileSet& ts) : ts_(&ts) {
  glue_names_.push_back("-");
  glue_ids_["-"] = 0;
  for (const auto& t : ts.tiles()) {
    std::array<int, 4> g{};
    for (Side s : kSides) g[index(s)] = intern(t.glue(s));
    tile_glues_.push_back(g);
  }
  box_ = maze.bounds();
  if (box_.empty()) box_.include({0, 0});
  pad_ = {box_.min_x - 1, box_.min_y - 1, box_.max_x + 1, box_.max_y + 1};
  pad_h_ = pad_.height();
  std::size_t n = static_cast<std::size_t>(pad_.width()) * pad_h_;
  base_kind_.assign(n, 0);
  base_glue_.assign(n * 4, 0);
  for (auto c : maze.cells()) base_kind_[idx(c)] = 1;
  for (const auto& [k, g] : maze.glues()) base_glue_[idx(k.cell) * 4 + index(k.side)] = intern(g);
  kind_ = base_kind_;
  glue_ = base_glue_;
  tile_.assign(n, -1);
}

int Engine::intern(const GlueLabel& g) {
  if (g.is_null()) return 0;
  auto [it, ins] = glue_ids_.emplace(g.str(), static_cast<int>(glue_names_.size()));
  if (ins) glue_names_.push_back(g.str());
  return it->second;
}

void Engine::reset() {
  for (int i : touched_) {
    kind_[i] = base_kind_[i];
    tile_[i] = -1;
    for (int k = 0; k < 4; ++k) glue_[i * 4 + k] = base_glue_[i * 4 + k];
  }
  touched_.clear();
  trace_.clear();
}

void Engine::overlay(Coord c, const TileType& t) {
  if (!box_.contains(c)) throw Error(Errc::invalid_argument, "overlay outside the maze box");
  int i = idx(c);
  if (kind_[i] != 0) throw Error(Errc::occupied_position, "overlay on occupied cell");
  kind_[i] = 1;
  for (Side s : kSides) glue_[i * 4 + index(s)] = intern(t.glue(s));
  touched_.push_back(i);
}

void Engine::preplace(Coord c, int tile) {
  if (!box_.contains(c)) throw Error(Errc::invalid_argument, "tile outside the maze box");
  RunReport dummy;
  place(idx(c), tile, dummy);
}

int Engine::exposed(int i, Side s) const {
  int j = i;
  switch (s) {
    case Side::N: j = i + 1; break;
    case Side::S: j = i - 1; break;
    case Side::E: j = i + pad_h_; break;
    case Side::W: j = i - pad_h_; break;
  }
  return glue_[j * 4 + index(opposite(s))];
}

int Engine::candidates(int i, MatchMode mode, int* out, int cap) const {
  int ex[4];
  int present = 0;
  for (int k = 0; k < 4; ++k) {
    ex[k] = exposed(i, static_cast<Side>(k));
    present += ex[k] != 0;
  }
  if (present < 2) return 0;
  int count = 0;
  for (int t = 0; t < static_cast<int>(tile_glues_.size()); ++t) {
    const auto& g = tile_glues_[t];
    int bonds = 0;
    bool mismatch = false;
    for (int k = 0; k < 4; ++k) {
      if (ex[k] == 0 || g[k] == 0) continue;
      if (ex[k] == g[k]) ++bonds;
      else mismatch = true;
    }
    if (bonds >= 2 && !(mode == MatchMode::strict && mismatch)) {
      if (count < cap) out[count] = t;
      ++count;
    }
  }
  return count;
}

void Engine::place(int i, int tile, RunReport& rep) {
  const auto& g = tile_glues_[tile];
  for (int k = 0; k < 4; ++k) {
    int e = exposed(i, static_cast<Side>(k));
    if (e != 0 && g[k] != 0 && e != g[k]) {
      if (rep.mismatches++ == 0) rep.first_mismatch = coord(i);
    }
  }
  kind_[i] = 2;
  tile_[i] = static_cast<std::int16_t>(tile);
  for (int k = 0; k < 4; ++k) glue_[i * 4 + k] = g[k];
  touched_.push_back(i);
  trace_.emplace_back(coord(i), tile);
}

RunReport Engine::run(const RunOptions& opt) {
  RunReport rep;
  const int n = static_cast<int>(kind_.size());
  auto inner = [&](int i) { return box_.contains(coord(i)); };
  auto neighbours = [&](int i, auto&& fn) {
    fn(i + 1);
    fn(i - 1);
    fn(i + pad_h_);
    fn(i - pad_h_);
  };
  auto note_choice = [&](int i, int count) {
    if (count > 1 && !rep.nondeterministic) {
      rep.nondeterministic = true;
      rep.first_nondeterminism = coord(i);
    }
  };
  int cand[64];

  if (opt.order == OrderPolicy::raster) {
    // Min-heap of positions whose neighbourhood changed; index order is raster order.
    std::vector<std::uint8_t> queued(n, 0);
    std::priority_queue<int, std::vector<int>, std::greater<>> heap;
    auto push = [&](int j) {
      if (kind_[j] == 0 && !queued[j] && inner(j)) {
        queued[j] = 1;
        heap.push(j);
      }
    };
    for (int i = 0; i < n; ++i)
      if (kind_[i] != 0) neighbours(i, push);
    while (!heap.empty()) {
      int i = heap.top();
      heap.pop();
      queued[i] = 0;
      if (kind_[i] != 0) continue;
      int c = candidates(i, opt.mode, cand, 64);
      if (c == 0) continue;
      note_choice(i, c);
      if (rep.steps >= opt.max_steps)
        throw Error(Errc::step_budget_exceeded, std::to_string(opt.max_steps) + " steps");
      place(i, cand[0], rep);
      ++rep.steps;
      neighbours(i, push);
    }
    return rep;
  }

  // Random order: keep the whole frontier, pick a uniform position and tile.
  std::mt19937_64 rng(opt.rng_seed);
  std::vector<int> front;
  std::vector<int> slot(n, -1);
  auto evaluate = [&](int j) {
    if (!inner(j)) return;
    int c = kind_[j] == 0 ? candidates(j, opt.mode, cand, 64) : 0;
    if (c > 0) {
      note_choice(j, c);
      if (slot[j] < 0) {
        slot[j] = static_cast<int>(front.size());
        front.push_back(j);
      }
    } else if (slot[j] >= 0) {
      int last = front.back();
      front[slot[j]] = last;
      slot[last] = slot[j];
      front.pop_back();
      slot[j] = -1;
    }
  };
  for (int i = 0; i < n; ++i)
    if (kind_[i] != 0) neighbours(i, evaluate);
  while (!front.empty()) {
    int i = front[std::uniform_int_distribution<std::size_t>(0, front.size() - 1)(rng)];
    int c = candidates(i, opt.mode, cand, 64);
    if (rep.steps >= opt.max_steps)
      throw Error(Errc::step_budget_exceeded, std::to_string(opt.max_steps) + " steps");
    int pick = std::uniform_int_distribution<int>(0, std::min(c, 64) - 1)(rng);
    place(i, cand[pick], rep);
    ++rep.steps;
    evaluate(i);
    neighbours(i, evaluate);
  }
  return rep;
}

int Engine::tile_at(Coord c) const {
  if (!pad_.contains(c)) return -1;
  return tile_[idx(c)];
}

const std::string& Engine::glue_at(EdgeSite e) const {
  auto side_glue = [&](Coord c, Side s) -> int {
    if (!pad_.contains(c)) return 0;
    return glue_[idx(c) * 4 + index(s)];
  };
  int t1 = tile_at(e.cell()), t2 = tile_at(e.neighbour());
  int g1 = side_glue(e.cell(), e.side()), g2 = side_glue(e.neighbour(), opposite(e.side()));
  if (t1 >= 0 && g1 != 0) return glue_names_[g1];
  if (t2 >= 0 && g2 != 0) return glue_names_[g2];
  if (t1 >= 0 || t2 >= 0) return glue_names_[0];
  return glue_names_[g1 != 0 ? g1 : g2];
}

Assembly Engine::to_assembly(std::shared_ptr<const Maze> maze) const {
  Assembly a(std::move(maze));
  for (const auto& [c, t] : trace_) a.place(c, ts_->tiles()[t]);
  return a;
}

RunResult run_to_terminal(const Assembly& start, const TileSet& ts, const RunOptions& opt) {
  Engine eng(start.maze(), ts);
  for (const auto& p : start.trace()) {
    const auto& t = start.tile_of(p);
    const auto* known = ts.find(t.name);
    if (!known || !(*known == t))
      throw Error(Errc::invalid_argument, "start assembly uses a tile outside the tile set");
    eng.preplace(p.pos, static_cast<int>(known - ts.tiles().data()));
  }
  auto prior = start.trace().size();
  RunReport rep = eng.run(opt);
  Assembly out = start;
  const auto& tr = eng.trace();
  for (std::size_t k = prior; k < tr.size(); ++k) out.place(tr[k].first, ts.tiles()[tr[k].second]);
  return {std::move(out), rep};
}

}  // namespace mawatam
