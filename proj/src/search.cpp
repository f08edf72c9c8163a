#include "mawatam/search.hpp"

#include <algorithm>
#include <set>

#include "mawatam/error.hpp"

namespace mawatam {

namespace {

struct Slot {
  Coord cell;
  Side side;  // side of the boundary cell facing the rectangle
  const std::vector<std::string>* labels;
};

std::vector<std::string> side_alphabet(const TileSet& ts, Side s) {
  std::set<std::string> a;
  for (const auto& t : ts.tiles())
    if (!t.glue(s).is_null()) a.insert(t.glue(s).str());
  std::vector<std::string> out{"-"};
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

}  // namespace

void enumerate_gate_seeds(const TileSet& ts, const std::string& tileset_id, const std::string& table,
                          int w, int h, GateConvention conv,
                          const std::function<bool(const Gadget&)>& visit, SearchStats* stats) {
  int k = table.size() == 4 ? 2 : table.size() == 2 ? 1 : table.size() == 1 ? 0 : -1;
  if (k < 0 || table.find_first_not_of("01") != std::string::npos)
    throw Error(Errc::invalid_argument, "truth table must have 1, 2 or 4 bits");
  if (w < 1 || h < 1) return;

  std::vector<Port> ins;
  auto east_in = [&](int row) {
    Port p;
    p.cell = {w - 1, row};
    p.side = Side::E;
    p.axis = Axis::h;
    p.parity = ParityClass::none;
    return p;
  };
  if (conv == GateConvention::east) {
    if (k >= 1) ins.push_back(east_in(h - 1));
    if (k >= 2) {
      if (h < 3) return;
      ins.push_back(east_in(h - 3));
    }
  } else {
    if (k >= 1) {
      Port p = east_in(h - 1);
      p.side = Side::N;
      p.axis = Axis::v;
      ins.push_back(p);
    }
    if (k >= 2) ins.push_back(east_in(h - 1));
  }
  std::set<Coord> drivers;
  for (const auto& p : ins) drivers.insert(p.outside());

  // Glues on a boundary cell face the rectangle: north cells show S, south N, east W.
  const auto north = side_alphabet(ts, Side::N);
  const auto south = side_alphabet(ts, Side::S);
  const auto east = side_alphabet(ts, Side::E);
  std::vector<Slot> slots;
  Maze frame;
  for (int x = 0; x < w; ++x) {
    Coord c{x, h};
    if (drivers.count(c)) continue;
    frame.add_cell(c);
    slots.push_back({c, Side::S, &north});
  }
  for (int x = 0; x < w; ++x) {
    frame.add_cell({x, -1});
    slots.push_back({{x, -1}, Side::N, &south});
  }
  for (int y = h - 1; y >= 0; --y) {
    Coord c{w, y};
    if (drivers.count(c)) continue;
    frame.add_cell(c);
    slots.push_back({c, Side::W, &east});
  }
  for (auto d : drivers) frame.add_input_site(d);

  std::vector<TileType> drive[2] = {{}, {}};
  for (const auto& p : ins)
    for (int b = 0; b < 2; ++b)
      drive[b].push_back(make_tile("in", "-", "-", p.side == Side::N ? std::to_string(b) : "-",
                                   p.side == Side::E ? std::to_string(b) : "-"));

  const std::size_t cases = std::size_t{1} << k;
  std::vector<std::size_t> digit(slots.size(), 0);
  SearchStats local;
  SearchStats& st = stats ? *stats : local;

  for (;;) {
    ++st.candidates;
    Maze m = frame;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const auto& lab = (*slots[i].labels)[digit[i]];
      if (lab != "-") m.set_glue(slots[i].cell, slots[i].side, GlueLabel(lab));
    }
    Engine eng(m, ts);
    // rows[y] stays true while every case so far put the table bit on W(0,y)
    std::vector<char> rows(h, 1);
    std::size_t tiles = 0;
    bool ok = true;
    for (std::size_t c = 0; c < cases && ok; ++c) {
      eng.reset();
      for (std::size_t i = 0; i < ins.size(); ++i) {
        int bit = (c >> (k - 1 - i)) & 1;
        eng.overlay(ins[i].outside(), drive[bit][i]);
      }
      ++st.runs;
      auto r = eng.run({});
      if (r.nondeterministic || (c > 0 && r.steps != tiles) || r.steps == 0) {
        ok = false;
        break;
      }
      tiles = r.steps;
      std::string want(1, table[c]);
      bool any = false;
      for (int y = 0; y < h; ++y) {
        if (rows[y] && eng.glue_at(EdgeSite({0, y}, Side::W)) != want) rows[y] = 0;
        any = any || rows[y];
      }
      ok = any;
    }
    if (ok) {
      for (int y = h - 1; y >= 0; --y) {
        if (!rows[y]) continue;
        Gadget g;
        g.name = "gate-" + table;
        g.tileset_id = tileset_id;
        g.fragment = m;
        g.fragment.clear_input_sites();
        for (auto& p : ins) g.ports.push_back(p);
        Port out;
        out.cell = {0, y};
        out.side = Side::W;
        out.dir = PortDir::out;
        g.ports.push_back(out);
        g.truth = {table};
        g.tiles = static_cast<int>(tiles);
        ++st.solutions;
        if (!visit(g)) return;
      }
    }
    std::size_t i = slots.size();
    while (i > 0) {
      --i;
      if (++digit[i] < slots[i].labels->size()) break;
      digit[i] = 0;
      if (i == 0) return;
    }
    if (slots.empty()) return;
  }
}

std::optional<Gadget> search_gate_seed(const TileSet& ts, const std::string& tileset_id,
                                       const std::string& table, int max_w, int max_h,
                                       GateConvention conv, SearchStats* stats) {
  std::vector<std::pair<int, int>> dims;
  for (int w = 1; w <= max_w; ++w)
    for (int h = 1; h <= max_h; ++h) dims.emplace_back(w, h);
  std::stable_sort(dims.begin(), dims.end(),
                   [](auto a, auto b) { return a.first * a.second < b.first * b.second; });
  // Dimensions run by increasing area, so keeping the first seed of each tile
  // count breaks ties by area.
  std::optional<Gadget> best;
  for (auto [w, h] : dims)
    enumerate_gate_seeds(ts, tileset_id, table, w, h, conv,
                         [&](const Gadget& g) {
                           if (!best || g.tiles < best->tiles) best = g;
                           return true;
                         },
                         stats);
  if (best) validate_gadget(*best, ts);
  return best;
}

int glue_distance(const Gadget& a, const Gadget& b) {
  if (a.fragment.cells() != b.fragment.cells())
    throw Error(Errc::invalid_argument, "seeds differ in shape");
  std::set<SeedSide> keys;
  for (const auto& [k, v] : a.fragment.glues()) keys.insert(k);
  for (const auto& [k, v] : b.fragment.glues()) keys.insert(k);
  int d = 0;
  for (const auto& k : keys)
    if (a.fragment.glue(k.cell, k.side) != b.fragment.glue(k.cell, k.side)) ++d;
  return d;
}

}  // namespace mawatam
