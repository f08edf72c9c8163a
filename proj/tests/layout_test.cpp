#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "mawatam/engine.hpp"
#include "mawatam/error.hpp"
#include "mawatam/layout.hpp"
#include "mawatam/tilesets.hpp"

using namespace mawatam;

namespace {

const char* kPrime = "in x\nin y\nin z\nnx = NOT(x)\na = AND(nx, y)\nb = AND(x, z)\no = OR(a, b)\nout o\n";
const char* kTilesets[] = {"nand-nxor", "collatz"};

std::vector<int> bits_of(unsigned v, std::size_t n) {
  std::vector<int> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (v >> (n - 1 - i)) & 1;
  return b;
}

RunOptions strict() {
  RunOptions o;
  o.mode = MatchMode::strict;
  return o;
}

// Simulates every input on the compiled maze and compares against the circuit.
void check_exhaustive(const Circuit& c, const CompiledMaze& m) {
  MazeRunner r(m);
  for (unsigned v = 0; v < (1u << c.inputs.size()); ++v) {
    auto bits = bits_of(v, c.inputs.size());
    auto rep = r.run(bits, strict());
    INFO("input " << v);
    CHECK_FALSE(rep.nondeterministic);
    CHECK(rep.mismatches == 0);
    CHECK(r.output() == evaluate(c, bits));
  }
}

}  // namespace

TEST_CASE("prime circuit compiles on both tile sets") {
  auto c = parse_netlist(kPrime);
  for (const char* id : kTilesets) {
    INFO(std::string(id));
    auto m = compile(c, id);
    CHECK(m.input_sites().size() == 3);
    CHECK(m.accounting.unplanned == 0);
    CHECK(m.accounting.crossovers.size() == 1);
    MazeRunner r(m);
    std::string got;
    for (unsigned v = 0; v < 8; ++v) {
      r.run(bits_of(v, 3));
      got += char('0' + r.output());
    }
    CHECK(got == "00110101");
    check_exhaustive(c, m);
  }
}

TEST_CASE("random circuits agree with their netlists on every input") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 24; ++k) {
    const int n = 1 + k % 4, g = 2 + k % 7;
    auto text = random_netlist(rng, n, g);
    auto c = parse_netlist(text);
    for (const char* id : kTilesets) {
      INFO(std::string(id) << "\n" << text);
      auto m = compile(c, id);
      CHECK(m.accounting.unplanned == 0);
      check_exhaustive(c, m);
    }
  }
}

TEST_CASE("growth is confluent under random order") {
  auto c = parse_netlist(kPrime);
  for (const char* id : kTilesets) {
    auto m = compile(c, id);
    MazeRunner r(m);
    for (unsigned v = 0; v < 8; ++v) {
      r.run(bits_of(v, 3));
      auto ref = r.engine().trace().size();
      int out = r.output();
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        RunOptions o;
        o.order = OrderPolicy::random;
        o.rng_seed = seed;
        auto rep = r.run(bits_of(v, 3), o);
        CHECK_FALSE(rep.nondeterministic);
        CHECK(r.engine().trace().size() == ref);
        CHECK(r.output() == out);
      }
    }
  }
}

TEST_CASE("every tile binds through its north or east side") {
  auto c = parse_netlist(kPrime);
  for (const char* id : kTilesets) {
    INFO(std::string(id));
    auto m = compile(c, id);
    MazeRunner r(m);
    const std::vector<int> bits{1, 0, 1};
    r.run(bits);
    const auto& e = r.engine();
    const auto& tiles = e.tileset().tiles();
    auto glue_from = [&](Coord n, Side facing) -> std::string {
      if (m.maze().has_cell(n)) return m.maze().glue(n, facing).str();
      const auto& sites = m.input_sites();
      for (std::size_t i = 0; i < sites.size(); ++i)
        if (sites[i] == n) return input_tile(id, bits[i]).glue(facing).str();
      int t = e.tile_at(n);
      return t >= 0 ? tiles[t].glue(facing).str() : "-";
    };
    const int east = m.maze().bounds().max_x;
    for (const auto& [pos, t] : e.trace()) {
      CHECK(pos.x <= east);
      bool bound = false;
      for (Side s : {Side::N, Side::E}) {
        const auto& own = tiles[t].glue(s);
        if (!own.is_null() && own.str() == glue_from(pos.step(s), opposite(s))) bound = true;
      }
      CHECK_MESSAGE(bound, "tile at " << pos.x << "," << pos.y);
    }
  }
}

TEST_CASE("constant circuits need no input sites") {
  for (const char* id : kTilesets) {
    for (int b : {0, 1}) {
      const std::string k = "const k " + std::to_string(b) + "\n";
      for (const auto& [tail, want] : {std::pair{std::string("out k\n"), b}, {"z = NOT(k)\nout z\n", 1 - b}}) {
        auto m = compile(parse_netlist(k + tail), id);
        CHECK(m.input_sites().empty());
        MazeRunner r(m);
        r.run({});
        CHECK(r.output() == want);
      }
    }
  }
}

TEST_CASE("input encoding and output reading") {
  auto c = parse_netlist(kPrime);
  for (const char* id : kTilesets) {
    auto m = compile(c, id);
    CHECK_THROWS_AS(encode_input(m, {1, 0}), Error);
    try {
      encode_input(m, {1, 0});
    } catch (const Error& e) {
      CHECK(e.code() == Errc::length_mismatch);
    }
    for (unsigned v = 0; v < 8; ++v) {
      auto bits = bits_of(v, 3);
      Maze x = encode_input(m, bits);
      CHECK(x.input_sites().empty());
      auto res = run_to_terminal(Assembly(std::make_shared<const Maze>(x)), tileset_by_id(id));
      CHECK(read_output(res.assembly, m) == evaluate(c, bits));
    }
    // With the source row sealed nothing reaches the output edge.
    CompiledMaze broken = m;
    auto site = broken.layout.input_sites[0];
    broken.layout.maze.clear_input_sites();
    for (std::size_t i = 1; i < m.input_sites().size(); ++i) broken.layout.maze.add_input_site(m.input_sites()[i]);
    broken.layout.input_sites.erase(broken.layout.input_sites.begin());
    broken.layout.maze.add_cell(site);
    MazeRunner r(broken);
    r.run({0, 0});
    try {
      (void)r.output();
      FAIL("output read from an incomplete assembly");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::output_not_reached);
    }
  }
}

TEST_CASE("wire corrections restore polarity") {
  // NOT feeding a gate and a vertical jog into a gate both leave an odd wire.
  auto c = parse_netlist(kPrime);
  std::map<std::string, std::set<std::string>> kinds;
  std::mt19937_64 rng(3);
  for (const char* id : kTilesets) {
    for (int k = 0; k < 12; ++k) {
      auto m = compile(parse_netlist(random_netlist(rng, 3, 6)), id);
      for (const auto& r : m.layout.routes) kinds[id].insert(r.correction->kind);
    }
    auto m = compile(c, id);
    for (const auto& r : m.layout.routes) kinds[id].insert(r.correction->kind);
  }
  CHECK(kinds["nand-nxor"] == std::set<std::string>{"not", "wire"});
  CHECK(kinds["collatz"] == std::set<std::string>{"buffer", "wire"});
}

TEST_CASE("tile accounting") {
  auto c = parse_netlist(kPrime);
  for (const char* id : kTilesets) {
    INFO(std::string(id));
    auto m = compile(c, id);
    const auto& a = m.accounting;
    std::size_t sum = a.wire_tiles;
    for (const auto& [p, n] : a.per_gadget) sum += n;
    CHECK(sum == a.total);
    CHECK(a.max_gate <= (std::string(id) == "nand-nxor" ? 6u : 14u));
    REQUIRE(a.crossovers.size() == 1);
    CHECK(a.crossovers[0] == (std::string(id) == "nand-nxor" ? 34u : 33u));
    MazeRunner r(m);
    r.run({0, 0, 0});
    CHECK(r.engine().trace().size() == a.total);
    CHECK(m.layout.placements.size() == a.per_gadget.size());
  }
}
