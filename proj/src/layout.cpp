#include "mawatam/layout.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "mawatam/error.hpp"
#include "mawatam/tilesets.hpp"

namespace mawatam {

namespace {

constexpr int kSourcePitch = 4;  // rows between layer-0 sources
constexpr int kJogPitch = 3;     // columns between jogs in a shift zone

std::string at(Coord c) { return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")"; }

// Cell bookkeeping with collision detection.
struct Canvas {
  Maze maze;
  std::unordered_map<Coord, int, CoordHash> owner;
  std::set<Coord> sites;

  [[noreturn]] static void clash(Coord c) { throw Error(Errc::unroutable, "cell " + at(c) + " claimed twice"); }
  bool free(Coord c) const { return !maze.has_cell(c) && !owner.count(c) && !sites.count(c); }
  void block(Coord c) {
    if (owner.count(c) || sites.count(c)) clash(c);
    maze.add_cell(c);
  }
  void glue(Coord c, Side s, const std::string& label) {
    block(c);
    if (!maze.glue(c, s).is_null() && maze.glue(c, s).str() != label) clash(c);
    maze.set_glue(c, s, GlueLabel(label));
  }
  void tile(Coord c, int who) {
    if (!free(c)) clash(c);
    owner[c] = who;
  }
  void site(Coord c) {
    if (!free(c)) clash(c);
    sites.insert(c);
  }
};

// Wiring primitives; each places one tile and returns whether it negates.
struct Wiring {
  bool nn;
  Canvas& cv;

  bool h(Coord c, bool negate = false) {
    cv.tile(c, -1);
    if (nn) {
      cv.glue(c.step(Side::N), Side::S, negate ? "0" : "1");
      return negate;
    }
    cv.glue(c.step(Side::S), Side::N, "1");
    return true;
  }
  bool turn_ws(Coord c) {
    cv.tile(c, -1);
    cv.glue(c.step(Side::N), Side::S, nn ? "1" : "0");
    return nn;
  }
  bool v(Coord c) {
    cv.tile(c, -1);
    cv.glue(c.step(Side::E), Side::W, nn ? "1" : "0");
    return nn;
  }
  bool turn_sw(Coord c) {
    cv.tile(c, -1);
    cv.glue(c.step(Side::E), Side::W, nn ? "1" : "0");
    return false;
  }
  int correction_width() const { return nn ? 1 : 3; }
  // Tiles x0, x0-1, ... on `row`; negates iff `flip`.
  bool correction(int x0, int row, bool flip) {
    if (nn) return h({x0, row}, flip);
    if (flip) {
      for (int i = 0; i < 3; ++i) h({x0 - i, row});
      return true;
    }
    for (int i = 0; i < 3; ++i) cv.tile({x0 - i, row}, -1);
    cv.glue({x0 - 2, row + 1}, Side::S, "0");
    cv.glue({x0 - 1, row + 1}, Side::S, "1");
    cv.glue({x0, row - 1}, Side::N, "0");
    cv.block({x0 - 1, row - 1});
    cv.block({x0 - 2, row - 1});
    return false;
  }
};

// How a plan gate is realised inside its layer band (gadget-local coordinates).
struct Shape {
  const Gadget* g = nullptr;  // null: the wire passes straight through
  std::vector<int> arrive;    // row each input track must be on at the approach
  Bounds box;
  std::vector<Coord> tiles;
  std::vector<Port> ins, outs;
};

std::vector<Coord> tile_cells(const Gadget& g, const TileSet& ts) {
  std::set<Coord> cells;
  const std::size_t k = g.inputs().size();
  for (std::size_t v = 0; v < (std::size_t{1} << k); ++v) {
    std::vector<int> bits(k);
    for (std::size_t i = 0; i < k; ++i) bits[i] = (v >> i) & 1;
    Engine e(gadget_harness(g, bits), ts);
    e.run({});
    for (const auto& [c, t] : e.trace()) cells.insert(c);
  }
  return {cells.begin(), cells.end()};
}

Shape shape_of(const Gadget& g, const TileSet& ts) {
  Shape s;
  s.g = &g;
  s.ins = g.inputs();
  s.outs = g.outputs();
  s.tiles = tile_cells(g, ts);
  for (auto c : g.fragment.cells()) s.box.include(c);
  for (auto c : s.tiles) s.box.include(c);
  auto with_rows = [&](Coord c) {
    s.box.include(c);
    s.box.include(c.step(Side::N));
    s.box.include(c.step(Side::S));
  };
  for (const auto& p : s.ins) {
    if (p.side == Side::N) {
      s.arrive.push_back(p.cell.y + 2);
      with_rows({p.cell.x + 1, p.cell.y + 2});
      with_rows({p.cell.x, p.cell.y + 2});
      with_rows({p.cell.x, p.cell.y + 1});
    } else {
      s.arrive.push_back(p.cell.y);
      with_rows(p.outside());
    }
  }
  for (const auto& p : s.outs) with_rows(p.outside());
  return s;
}

std::string role_of(const Gate& g) {
  switch (g.kind) {
    case GateKind::table: return "gate-" + g.table;
    case GateKind::fanout: return "fanout";
    case GateKind::crossover: return "crossover";
    default: return "";
  }
}

struct Track {
  int start_x = 0;
  int row = 0;
  bool neg = false;  // the glue carries the complement of the signal
};

}  // namespace

RoutedLayout route(const LayeredPlan& plan, const GadgetLibrary& lib) {
  plan.check();
  const std::string id = lib.tileset_id();
  const bool nn = id == "nand-nxor";
  const TileSet ts = tileset_by_id(id);
  const Circuit& C = plan.circuit;

  RoutedLayout out;
  out.tileset_id = id;
  Canvas cv;
  Wiring w{nn, cv};

  std::set<std::pair<int, int>> consumed;
  for (const auto& g : C.gates)
    for (const auto& s : g.in) consumed.insert({s.gate, s.pin});

  std::map<std::string, Shape> shapes;
  auto shape = [&](const Gate& g) -> const Shape* {
    std::string role = role_of(g);
    if (role.empty()) return nullptr;
    auto it = shapes.find(role);
    if (it == shapes.end()) it = shapes.emplace(role, shape_of(lib.get(role), ts)).first;
    return &it->second;
  };

  // Layer 0: one source per row.
  std::vector<Track> tracks;
  std::map<int, Coord> site_of;
  for (std::size_t k = 0; k < plan.layers[0].size(); ++k) {
    int g = plan.layers[0][k];
    Coord s{0, -kSourcePitch * static_cast<int>(k)};
    const Gate& gate = C.gates[g];
    if (gate.kind == GateKind::input) {
      cv.site(s);
      site_of[g] = s;
    } else {
      cv.glue(s, Side::W, gate.kind == GateKind::const1 ? "1" : "0");
    }
    if (consumed.count({g, 0})) tracks.push_back({s.x - 1, s.y, false});
  }
  for (int g : C.inputs) out.input_sites.push_back(site_of.at(g));

  bool have_output = false;
  for (int L = 1; L < plan.depth(); ++L) {
    const auto& nodes = plan.layers[L];
    struct Node {
      int gate;
      const Shape* sh;
      int base = 0;
      int first = 0;  // index of its first input track
      int placement = -1;
    };
    std::vector<Node> placed;
    std::vector<int> arrive(tracks.size());
    int j = 0, prev_min = INT_MAX;
    for (int g : nodes) {
      Node nd{g, shape(C.gates[g])};
      nd.first = j;
      const int n_in = static_cast<int>(C.gates[g].in.size());
      int top = nd.sh ? nd.sh->box.max_y : 1, bottom = nd.sh ? nd.sh->box.min_y : -1;
      int base = INT_MAX;
      for (int i = 0; i < n_in; ++i) base = std::min(base, tracks[j + i].row - (nd.sh ? nd.sh->arrive[i] : 0));
      if (prev_min != INT_MAX) base = std::min(base, prev_min - 1 - top);
      nd.base = base;
      prev_min = base + bottom;
      for (int i = 0; i < n_in; ++i) arrive[j + i] = base + (nd.sh ? nd.sh->arrive[i] : 0);
      j += n_in;
      placed.push_back(nd);
    }

    // Columns: shift zone (jogs, lowest track east-most), correction zone, gadgets.
    int east = INT_MAX;
    for (const auto& t : tracks) east = std::min(east, t.start_x);
    const int Es = east - 1;
    std::vector<int> jog_col(tracks.size(), INT_MIN);
    int slots = 0;
    for (int t = static_cast<int>(tracks.size()) - 1; t >= 0; --t)
      if (arrive[t] < tracks[t].row) jog_col[t] = Es - kJogPitch * slots++ - 1;
    const int Xc = Es - kJogPitch * slots;
    const int Wc = w.correction_width();
    const int AE = Xc - Wc;

    for (auto& nd : placed) {
      if (!nd.sh) continue;
      Coord off{AE - nd.sh->box.max_x, nd.base};
      nd.placement = static_cast<int>(out.placements.size());
      out.placements.push_back({nd.sh->g->name, off, nd.gate});
      const Gadget& g = *nd.sh->g;
      for (auto c : g.fragment.cells()) cv.block(c + off);
      for (const auto& [k, label] : g.fragment.glues()) cv.glue(k.cell + off, k.side, label.str());
      for (auto c : nd.sh->tiles) cv.tile(c + off, nd.placement);
    }

    std::vector<Track> next;
    for (const auto& nd : placed) {
      const Gate& gate = C.gates[nd.gate];
      const int n_in = static_cast<int>(gate.in.size());
      const Coord off{nd.sh ? AE - nd.sh->box.max_x : 0, nd.base};
      for (int i = 0; i < n_in; ++i) {
        const int t = nd.first + i;
        const Track& tr = tracks[t];
        const int a = arrive[t];
        Route r;
        r.plan_layer = L;
        bool p = tr.neg;
        auto run = [&](int x0, int x1, int row) {
          if (x0 < x1) return;
          bool neg = false;
          for (int x = x0; x >= x1; --x) neg ^= w.h({x, row});
          r.segments.push_back({SegmentKind::horizontal, {x0, row}, {x1, row}, neg});
          p ^= neg;
        };
        if (jog_col[t] != INT_MIN) {
          const int c = jog_col[t];
          run(tr.start_x, c + 1, tr.row);
          bool neg = w.turn_ws({c, tr.row});
          for (int y = tr.row - 1; y > a; --y) neg ^= w.v({c, y});
          neg ^= w.turn_sw({c, a});
          r.segments.push_back({SegmentKind::vertical, {c, tr.row}, {c, a}, neg});
          p ^= neg;
          run(c - 1, Xc + 1, a);
        } else {
          run(tr.start_x, Xc + 1, a);
        }

        // Parity still to come between the correction and the in-port.
        const Port* port = nd.sh ? &nd.sh->ins[i] : nullptr;
        bool rest = false;
        int stop_x = AE + 1;  // pass-through: nothing after the correction
        if (port) {
          stop_x = port->cell.x + off.x + 1;
          if (!nn) rest = (AE - stop_x + 1) % 2 == 1;
          if (port->polarity == Polarity::negated) rest = !rest;
        }
        const bool flip = p != rest;
        p ^= w.correction(Xc, a, flip);
        r.correction = Correction{{Xc, a}, flip ? "not" : "wire"};
        if (!nn) r.correction->kind = flip ? "wire" : "buffer";
        if (port) {
          run(AE, stop_x, a);
          if (port->side == Side::N) {
            Coord turn{port->cell.x + off.x, a};
            bool neg = w.turn_ws(turn);
            for (int y = a - 1; y > port->cell.y + off.y; --y) neg ^= w.v({turn.x, y});
            r.segments.push_back({SegmentKind::vertical, turn, {turn.x, port->cell.y + off.y + 1}, neg});
            p ^= neg;
          }
          if (p) throw Error(Errc::unroutable, "polarity left uncorrected at " + at(port->cell + off));
        } else if (gate.kind == GateKind::output) {
          out.output = EdgeSite({Xc - Wc + 1, a}, Side::W);
          have_output = true;
        } else {
          next.push_back({AE, a, gate.kind == GateKind::not_});
        }
        out.routes.push_back(std::move(r));
      }
      if (nd.sh) {
        const auto& outs = nd.sh->outs;
        for (int pin = 0; pin < static_cast<int>(outs.size()); ++pin)
          if (consumed.count({nd.gate, pin})) {
            Coord s = outs[pin].outside() + off;
            next.push_back({s.x, s.y, outs[pin].polarity == Polarity::negated});
          }
      }
    }
    tracks = std::move(next);
  }
  if (!have_output) throw Error(Errc::unroutable, "the plan has no output layer");

  // Wall every planned tile in, so nothing can grow off the planned cells.
  // Cells a gadget glue points at stay free, as they were when it was validated.
  std::set<Coord> faced;
  for (const auto& [k, label] : cv.maze.glues()) faced.insert(k.cell.step(k.side));
  auto wall = [&](Coord c) {
    for (Side s : kSides) {
      Coord n = c.step(s);
      if (cv.free(n) && !(faced.count(n))) cv.maze.add_cell(n);
    }
  };
  for (const auto& [c, who] : cv.owner) wall(c);
  for (auto c : cv.sites) wall(c);

  out.maze = std::move(cv.maze);
  for (auto c : out.input_sites) out.maze.add_input_site(c);
  out.maze.set_output_edge(out.output);
  out.owner = std::move(cv.owner);
  out.maze.validate();
  return out;
}

TileType input_tile(const std::string& tileset_id, int bit) {
  if (tileset_id == "nand-nxor") return nand_nxor().at(bit ? "11" : "10");
  if (tileset_id == "collatz" || tileset_id == "collatz-ext") return collatz().at(bit ? "2" : "0");
  throw Error(Errc::invalid_argument, "no input tiles for '" + tileset_id + "'");
}

CompiledMaze compile(const Circuit& c, const std::string& tileset_id, const GadgetLibrary& lib) {
  CompiledMaze m;
  m.tileset_id = tileset_id;
  m.circuit = c;
  m.planar = planarize(c);
  m.layout = route(layer(m.planar), lib);

  MazeRunner runner(m);
  runner.run(std::vector<int>(c.inputs.size(), 0));
  Accounting& acc = m.accounting;
  for (const auto& [pos, t] : runner.engine().trace()) {
    ++acc.total;
    auto it = m.layout.owner.find(pos);
    if (it == m.layout.owner.end()) ++acc.unplanned;
    else if (it->second < 0) ++acc.wire_tiles;
    else ++acc.per_gadget[it->second];
  }
  for (const auto& [idx, n] : acc.per_gadget) {
    const auto& role = m.layout.placements[idx].role;
    if (role == "crossover") acc.crossovers.push_back(n);
    else acc.max_gate = std::max(acc.max_gate, n);
  }
  return m;
}

Maze place_inputs(const Maze& m, const std::string& tileset_id, const std::vector<int>& bits) {
  const auto sites = m.input_sites();
  if (bits.size() != sites.size())
    throw Error(Errc::length_mismatch, "maze has " + std::to_string(sites.size()) + " input sites, got " +
                                           std::to_string(bits.size()) + " bits");
  Maze x = m;
  x.clear_input_sites();
  for (std::size_t i = 0; i < sites.size(); ++i) {
    TileType t = input_tile(tileset_id, bits[i]);
    x.add_cell(sites[i]);
    for (Side s : kSides)
      if (!x.has_cell(sites[i].step(s)) && !t.glue(s).is_null()) x.set_glue(sites[i], s, t.glue(s));
    x.note_input_tile(sites[i], t.name);
  }
  return x;
}

Maze encode_input(const CompiledMaze& m, const std::vector<int>& bits) {
  return place_inputs(m.maze(), m.tileset_id, bits);
}

namespace {
int bit_of(const std::string& g) {
  if (g == "0") return 0;
  if (g == "1") return 1;
  throw Error(Errc::output_not_reached, "output edge carries '" + g + "'");
}
}  // namespace

int read_output(const Assembly& terminal, const CompiledMaze& m) {
  return bit_of(glue_at(terminal, m.output_edge()).str());
}

MazeRunner::MazeRunner(const CompiledMaze& m)
    : m_(&m),
      ts_(tileset_by_id(m.tileset_id)),
      engine_(m.maze(), ts_),
      tiles_{input_tile(m.tileset_id, 0), input_tile(m.tileset_id, 1)} {}

RunReport MazeRunner::run(const std::vector<int>& bits, const RunOptions& opt) {
  const auto& sites = m_->input_sites();
  if (bits.size() != sites.size())
    throw Error(Errc::length_mismatch, "maze has " + std::to_string(sites.size()) + " input sites, got " +
                                           std::to_string(bits.size()) + " bits");
  engine_.reset();
  for (std::size_t i = 0; i < sites.size(); ++i) engine_.overlay(sites[i], tiles_[bits[i] & 1]);
  return engine_.run(opt);
}

int MazeRunner::output() const { return bit_of(engine_.glue_at(m_->output_edge())); }

}  // namespace mawatam
