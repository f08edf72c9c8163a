#include <mutex>

#include "mawatam/error.hpp"
#include "mawatam/gadget.hpp"

namespace mawatam {

namespace {

const char* const kCollatzGates[] = {
#include "collatz_gates.inc"
};

struct Builder {
  Gadget g;

  Builder(std::string name, std::string ts, int tiles) {
    g.name = std::move(name);
    g.tileset_id = std::move(ts);
    g.tiles = tiles;
  }
  Builder& seed(int x, int y) {
    g.fragment.add_cell({x, y});
    return *this;
  }
  Builder& glue(int x, int y, Side s, const std::string& label) {
    g.fragment.add_cell({x, y});
    g.fragment.set_glue({x, y}, s, GlueLabel(label));
    return *this;
  }
  Builder& port(int x, int y, Side s, PortDir d, Polarity pol = Polarity::plain,
                ParityClass par = ParityClass::none) {
    Axis ax = (s == Side::E || s == Side::W) ? Axis::h : Axis::v;
    g.ports.push_back({{x, y}, s, d, ax, pol, par});
    return *this;
  }
  Builder& in(int x, int y, Side s = Side::E) { return port(x, y, s, PortDir::in); }
  Builder& out(int x, int y, Side s = Side::W, Polarity pol = Polarity::plain,
               ParityClass par = ParityClass::none) {
    return port(x, y, s, PortDir::out, pol, par);
  }
  Builder& truth(std::string t) {
    g.truth.push_back(std::move(t));
    return *this;
  }
};

std::string bit(bool b) { return b ? "1" : "0"; }

// --- NAND-NXOR: a tile reads N and E, S = NAND, W = NXOR ---------------------

Gadget nn_gate(const std::string& table) {
  const std::string id = "nand-nxor";
  Builder b("gate-" + table, id, 0);
  b.truth(table);
  // Constants and single-input tables: one operand is absorbed by a seed.
  if (table == "0011" || table == "1100") {
    b.g.tiles = 1;
    b.glue(1, 0, Side::W, table == "0011" ? "1" : "0").in(0, 0, Side::N).in(1, 0).out(0, 0);
    return b.g;
  }
  if (table == "0101" || table == "1010") {
    b.g.tiles = 1;
    b.glue(0, 1, Side::S, table == "0101" ? "1" : "0").in(0, 1, Side::N).in(0, 0).out(0, 0);
    return b.g;
  }
  if (table == "1111" || table == "0000") {
    b.glue(0, 1, Side::S, "0").in(0, 1, Side::N).in(0, 0);
    b.glue(1, -1, Side::W, "1").seed(-1, 0);
    if (table == "1111") {
      b.g.tiles = 2;
      b.out(0, -1);
    } else {
      b.g.tiles = 3;
      b.glue(-1, 0, Side::S, "0").out(-1, -1);
    }
    return b.g;
  }
  struct Recipe {
    bool vx, hy, nand, neg;
  };
  static const std::map<std::string, Recipe> recipes = {
      {"1001", {false, false, false, false}}, {"0110", {false, false, false, true}},
      {"1110", {false, false, true, false}},  {"0001", {false, false, true, true}},
      {"1101", {false, true, true, false}},   {"1011", {true, false, true, false}},
      {"0010", {false, true, true, true}},    {"0100", {true, false, true, true}},
      {"0111", {true, true, true, false}},    {"1000", {true, true, true, true}},
  };
  const Recipe r = recipes.at(table);
  b.g.tiles = 1 + r.vx + r.hy + r.nand + r.neg;
  // vx: a vertical tile negates x on its way down; hy: a tile under a "0" seed negates y.
  if (r.vx) b.glue(1, 1, Side::W, "1").in(0, 1, Side::N);
  else b.in(0, 0, Side::N);
  if (r.hy) b.glue(1, 1, Side::S, "0").in(1, 0);
  else b.in(0, 0);
  if (!r.nand) {
    if (r.neg) b.glue(-1, 1, Side::S, "0").out(-1, 0);
    else b.out(0, 0);
    return b.g;
  }
  // Turn the NAND on the south side back west; the NXOR side is absorbed.
  b.glue(1, -1, Side::W, "1").seed(-1, 0);
  if (r.neg) b.glue(-1, 0, Side::S, "0").out(-1, -1);
  else b.out(0, -1);
  return b.g;
}

Gadget nn_crossover() {
  Builder b("crossover", "nand-nxor", 34);
  // Core: fanouts of a, b and t = NXOR(a,b); b = NXOR(a,t) on top, a = NXOR(t,b) below.
  b.glue(1, 1, Side::S, "1").glue(1, 1, Side::W, "1");
  b.glue(2, -1, Side::W, "1").glue(2, -2, Side::W, "1");
  b.glue(0, 3, Side::S, "1").glue(-1, 3, Side::S, "1").glue(-2, 3, Side::S, "1");
  b.glue(-1, 1, Side::S, "1").glue(-1, 1, Side::W, "1");
  b.glue(0, -1, Side::S, "1").glue(0, -1, Side::W, "1");
  b.seed(-2, -1).glue(-2, -1, Side::S, "1");
  // Leads: 6 + 5 tiles in, 4 + 5 tiles out.
  for (int x = 1; x <= 6; ++x) b.glue(x, 3, Side::S, "1");
  for (int x = 2; x <= 6; ++x) b.glue(x, 1, Side::S, "1");
  for (int x = -6; x <= -3; ++x) b.glue(x, 1, Side::S, "1");
  for (int x = -6; x <= -3; ++x) b.glue(x, -1, Side::S, "1");
  b.in(6, 2).in(6, 0).out(-6, 0).out(-6, -2);
  b.truth("0101").truth("0011");
  return b.g;
}

GadgetLibrary make_nand_nxor() {
  const std::string id = "nand-nxor";
  GadgetLibrary lib(id);
  for (int t = 0; t < 16; ++t) {
    std::string table;
    for (int i = 3; i >= 0; --i) table += bit((t >> i) & 1);
    lib.add(nn_gate(table));
  }
  lib.add(Builder("not", id, 1).glue(0, 1, Side::S, "0").in(0, 0).out(0, 0).truth("10").g);
  for (int v = 0; v < 2; ++v) {
    // No inputs: the east seed glue triggers growth.
    lib.add(Builder("const" + bit(v), id, 1)
                .glue(0, 1, Side::S, "1")
                .glue(1, 0, Side::W, bit(v))
                .out(0, 0)
                .truth(bit(v))
                .g);
  }
  lib.add(Builder("turn-ws", id, 1)
              .glue(0, 1, Side::S, "1")
              .in(0, 0)
              .out(0, 0, Side::S, Polarity::negated)
              .truth("01")
              .g);
  lib.add(Builder("turn-sw", id, 1).glue(1, 0, Side::W, "1").in(0, 0, Side::N).out(0, 0).truth("01").g);
  lib.add(Builder("fanout", id, 3)
              .glue(0, 1, Side::S, "1")
              .glue(1, -1, Side::W, "1")
              .glue(1, -2, Side::W, "1")
              .seed(-1, -1)
              .in(0, 0)
              .out(0, 0)
              .out(0, -2)
              .truth("01")
              .truth("01")
              .g);
  lib.add(nn_crossover());
  lib.add(lib.hwire(4));
  lib.add(lib.vwire(2));
  lib.add(lib.vwire(3));
  return lib;
}

// --- Collatz: a tile is a number x in 0..5 with N = x/3, E = x%3, W = x/2, S = x%2

Gadget cz_crossover() {
  Builder b("crossover", "collatz", 33);
  // 3x3 core rectangle at x in [-2,0], y in [0,2] computing 27a + 9b + 1 = 8W + S:
  // a enters the north of its east column, b the east of its top row; b leaves
  // west of the bottom row, a south of the west column.
  b.glue(-2, 3, Side::S, "0").glue(-1, 3, Side::S, "0");
  b.glue(1, 1, Side::W, "0").glue(1, 0, Side::W, "1");
  // a: turn down at (0,4), vertical (0,3).
  b.glue(0, 5, Side::S, "0").glue(1, 3, Side::W, "0");
  // a out: vertical (-2,-1), turn west at (-2,-2); absorbers and stoppers.
  b.glue(-1, -1, Side::W, "0").glue(-1, -2, Side::W, "0");
  b.seed(-2, -3).seed(-3, 1).seed(0, -1);
  // Leads of 5 tiles on each port; every lead tile sits on a "1".
  for (int x = 1; x <= 5; ++x) b.glue(x, 3, Side::N, "1").glue(x, 1, Side::N, "1");
  for (int x = -7; x <= -3; ++x) b.glue(x, -1, Side::N, "1").glue(x, -3, Side::N, "1");
  b.in(5, 4).in(5, 2).out(-7, 0).out(-7, -2);
  b.truth("0101").truth("0011");
  return b.g;
}

Gadget cz_fanout(bool odd) {
  Builder b(odd ? "fanout-odd" : "fanout", "collatz", odd ? 5 : 4);
  b.glue(0, 1, Side::S, "1").glue(-1, 1, Side::S, "0");
  b.glue(1, -1, Side::W, "1").glue(1, -2, Side::W, "0");
  b.seed(-1, -1).seed(0, -3);
  b.in(0, 0);
  if (odd) b.glue(-2, -1, Side::N, "1").out(-2, 0, Side::W, Polarity::negated);
  else b.out(-1, 0);
  b.out(0, -2).truth("01").truth("01");
  return b.g;
}

GadgetLibrary make_collatz() {
  const std::string id = "collatz";
  GadgetLibrary lib(id);
  for (const char* text : kCollatzGates) {
    Gadget g = load_gadget(text);
    g.name = "gate-" + g.truth.at(0);
    lib.add(std::move(g));
  }
  lib.add(Builder("not", id, 1).glue(0, -1, Side::N, "1").in(0, 0).out(0, 0).truth("10").g);
  for (int v = 0; v < 2; ++v) {
    lib.add(Builder("const" + bit(v), id, 1)
                .glue(0, -1, Side::N, "1")
                .glue(1, 0, Side::W, bit(!v))
                .out(0, 0)
                .truth(bit(v))
                .g);
  }
  lib.add(Builder("turn-ws", id, 1).glue(0, 1, Side::S, "0").in(0, 0).out(0, 0, Side::S).truth("01").g);
  lib.add(Builder("turn-ws-neg", id, 1)
              .glue(0, 1, Side::S, "1")
              .in(0, 0)
              .out(0, 0, Side::S, Polarity::negated)
              .truth("01")
              .g);
  lib.add(Builder("turn-sw", id, 1)
              .glue(1, 0, Side::W, "0")
              .seed(0, -1)
              .seed(-1, 1)
              .in(0, 0, Side::N)
              .out(0, 0)
              .truth("01")
              .g);
  lib.add(cz_fanout(false));
  lib.add(cz_fanout(true));
  lib.add(Builder("buffer", id, 3)
              .glue(-2, 1, Side::S, "0")
              .glue(-1, 1, Side::S, "1")
              .glue(0, -1, Side::N, "0")
              .seed(-2, -1)
              .seed(-1, -1)
              .in(0, 0)
              .out(-2, 0)
              .truth("01")
              .g);
  lib.add(cz_crossover());
  lib.add(lib.hwire(2));
  lib.add(lib.hwire(3));
  lib.add(lib.vwire(4));
  return lib;
}

}  // namespace

Gadget GadgetLibrary::hwire(int length) const {
  if (length < 1) throw Error(Errc::invalid_argument, "wire length must be positive");
  Builder b("hwire-" + std::to_string(length), tileset_id_, length);
  const bool collatz = tileset_id_ == "collatz";
  // NAND-NXOR: a "1" above keeps the bit. Collatz: a "1" below negates it.
  for (int i = 0; i < length; ++i) {
    if (collatz) b.glue(-i, -1, Side::N, "1");
    else b.glue(-i, 1, Side::S, "1");
  }
  bool neg = collatz && length % 2 == 1;
  auto par = !collatz ? ParityClass::none : length % 2 ? ParityClass::odd : ParityClass::even;
  b.in(0, 0).out(-(length - 1), 0, Side::W, neg ? Polarity::negated : Polarity::plain, par).truth("01");
  return b.g;
}

Gadget GadgetLibrary::vwire(int length) const {
  if (length < 1) throw Error(Errc::invalid_argument, "wire length must be positive");
  Builder b("vwire-" + std::to_string(length), tileset_id_, length);
  const bool collatz = tileset_id_ == "collatz";
  // NAND-NXOR: a "1" to the east negates each step. Collatz: a "0" keeps the bit.
  for (int i = 0; i < length; ++i) b.glue(1, -i, Side::W, collatz ? "0" : "1");
  bool neg = !collatz && length % 2 == 1;
  auto par = collatz ? ParityClass::none : length % 2 ? ParityClass::odd : ParityClass::even;
  b.in(0, 0, Side::N).out(0, -(length - 1), Side::S, neg ? Polarity::negated : Polarity::plain, par).truth("01");
  return b.g;
}

const GadgetLibrary& builtin_library(const std::string& tileset_id) {
  static std::once_flag once;
  static GadgetLibrary nn, cz;
  std::call_once(once, [] {
    nn = make_nand_nxor();
    cz = make_collatz();
  });
  if (tileset_id == "nand-nxor") return nn;
  if (tileset_id == "collatz" || tileset_id == "collatz-ext") return cz;
  throw Error(Errc::invalid_argument, "no builtin gadget library for '" + tileset_id + "'");
}

}  // namespace mawatam
