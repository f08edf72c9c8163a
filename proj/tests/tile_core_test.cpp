#include <memory>
#include <random>
#include <set>

#include "doctest.h"
#include "mawatam/assembly.hpp"
#include "mawatam/engine.hpp"
#include "mawatam/error.hpp"
#include "mawatam/formats.hpp"
#include "mawatam/tilesets.hpp"

using namespace mawatam;

namespace {

// NAND-NXOR horizontal wire: seed row above the wire with south glues "1",
// plus an east driver cell presenting `bit` on its west side.
std::shared_ptr<Maze> wire_maze(int len, const char* bit) {
  auto m = std::make_shared<Maze>();
  for (int x = 0; x < len; ++x) {
    m->add_cell({x, 1});
    m->set_glue({x, 1}, Side::S, "1");
  }
  m->add_cell({len, 0});
  m->set_glue({len, 0}, Side::W, bit);
  return m;
}

}  // namespace

TEST_CASE("glue matching") {
  CHECK_FALSE(GlueLabel::null().binds(GlueLabel::null()));
  CHECK(GlueLabel("1").binds("1"));
  CHECK_FALSE(GlueLabel("1").binds("0"));
  CHECK(GlueLabel("").is_null());
}

TEST_CASE("edge canonicalisation") {
  CHECK(EdgeSite({3, 4}, Side::N) == EdgeSite({3, 5}, Side::S));
  CHECK(EdgeSite({3, 4}, Side::E) == EdgeSite({4, 4}, Side::W));
  CHECK(EdgeSite({3, 4}, Side::N) != EdgeSite({3, 4}, Side::E));
  CHECK(EdgeSite({3, 4}, Side::W).side_of({3, 4}) == Side::W);
}

TEST_CASE("attachable tiles") {
  auto nn = nand_nxor();
  auto m = std::make_shared<Maze>();
  m->add_cell({0, 1});
  m->set_glue({0, 1}, Side::S, "1");
  m->add_cell({1, 0});
  m->set_glue({1, 0}, Side::W, "1");
  Assembly a(m);
  auto c = attachable_tiles(a, {0, 0}, nn);
  REQUIRE(c.size() == 1);
  CHECK(c[0]->glue(Side::S) == GlueLabel("0"));
  CHECK(c[0]->glue(Side::W) == GlueLabel("1"));

  auto cz = collatz();
  auto m2 = std::make_shared<Maze>();
  m2->add_cell({0, 1});
  m2->set_glue({0, 1}, Side::S, "1");
  m2->add_cell({1, 0});
  m2->set_glue({1, 0}, Side::W, "2");
  auto c2 = attachable_tiles(Assembly(m2), {0, 0}, cz);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0]->name == "5");

  // A single neighbour glue is never enough.
  auto m3 = std::make_shared<Maze>();
  m3->add_cell({1, 0});
  m3->set_glue({1, 0}, Side::W, "1");
  CHECK(attachable_tiles(Assembly(m3), {0, 0}, nn).empty());
}

TEST_CASE("attach errors and value semantics") {
  auto nn = nand_nxor();
  auto m = wire_maze(3, "1");
  Assembly a(m);
  CHECK_THROWS_AS(attach(a, {0, 1}, nn.tiles()[0]), Error);
  try {
    attach(a, {2, 1}, nn.tiles()[0]);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::occupied_position);
  }
  try {
    attach(a, {1, 0}, nn.at("11"));  // only the seed above binds
    FAIL("expected insufficient bonds");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::insufficient_bonds);
  }
  auto b = attach(a, {2, 0}, nn.at("11"));
  CHECK(a.size() == 0);
  CHECK(b.size() == 1);
}

TEST_CASE("strict mode refuses mismatches") {
  auto nn = nand_nxor();
  auto m = std::make_shared<Maze>();
  m->add_cell({0, 1});
  m->set_glue({0, 1}, Side::S, "1");
  m->add_cell({1, 0});
  m->set_glue({1, 0}, Side::W, "1");
  m->add_cell({0, -1});
  m->set_glue({0, -1}, Side::N, "x");  // tile "11" shows S=0 here
  Assembly a(m);
  CHECK(attachable_tiles(a, {0, 0}, nn).size() == 1);
  CHECK(attachable_tiles(a, {0, 0}, nn, MatchMode::strict).empty());
  auto r = run_to_terminal(a, nn);
  CHECK(r.report.mismatches == 1);
  CHECK_THROWS_AS(attach(a, {0, 0}, nn.at("11"), MatchMode::strict), Error);
}

TEST_CASE("frontier and wire propagation") {
  auto nn = nand_nxor();
  auto m = wire_maze(4, "0");
  Assembly a(m);
  CHECK(frontier(a, nn) == std::vector<Coord>{{3, 0}});
  CHECK(frontier(Assembly(std::make_shared<Maze>()), nn).empty());
  auto r = run_to_terminal(a, nn);
  CHECK(r.report.steps == 4);
  CHECK(frontier(r.assembly, nn).empty());
  CHECK(glue_at(r.assembly, EdgeSite({0, 0}, Side::W)).str() == "0");
  CHECK(glue_at(r.assembly, EdgeSite({0, 1}, Side::S)).str() == "1");
  CHECK(glue_at(r.assembly, EdgeSite({10, 10}, Side::S)).is_null());
}

TEST_CASE("empty maze runs zero steps") {
  auto r = run_to_terminal(Assembly(std::make_shared<Maze>()), nand_nxor());
  CHECK(r.report.steps == 0);
  CHECK(r.assembly.size() == 0);
}

TEST_CASE("random orders agree with raster on a grid of NAND-NXOR tiles") {
  // L-shaped seed: north row and east column with random bits fills a square.
  auto nn = nand_nxor();
  std::mt19937 rng(7);
  auto m = std::make_shared<Maze>();
  const int w = 9, h = 7;
  for (int x = 0; x < w; ++x) {
    m->add_cell({x, h});
    m->set_glue({x, h}, Side::S, std::to_string(rng() % 2));
  }
  for (int y = 0; y < h; ++y) {
    m->add_cell({w, y});
    m->set_glue({w, y}, Side::W, std::to_string(rng() % 2));
  }
  Assembly a(m);
  auto ref = run_to_terminal(a, nn);
  CHECK(ref.assembly.size() == w * h);
  CHECK_FALSE(ref.report.nondeterministic);
  for (std::uint64_t s = 1; s <= 20; ++s) {
    auto r = run_to_terminal(a, nn, {OrderPolicy::random, s});
    CHECK(same_tiles(r.assembly, ref.assembly));
    CHECK_FALSE(r.report.nondeterministic);
  }
}

TEST_CASE("nondeterminism is flagged") {
  // (S,W) = (1,0) is shared by two NAND-NXOR tiles.
  auto nn = nand_nxor();
  auto m = std::make_shared<Maze>();
  m->add_cell({0, -1});
  m->set_glue({0, -1}, Side::N, "1");
  m->add_cell({-1, 0});
  m->set_glue({-1, 0}, Side::E, "0");
  auto r = run_to_terminal(Assembly(m), nn);
  CHECK(r.report.nondeterministic);
  CHECK(r.report.first_nondeterminism == Coord{0, 0});
}

TEST_CASE("step budget") {
  auto m = wire_maze(50, "1");
  RunOptions opt;
  opt.max_steps = 10;
  try {
    run_to_terminal(Assembly(m), nand_nxor(), opt);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::step_budget_exceeded);
  }
}

TEST_CASE("trace replay satisfies the cooperative rule") {
  auto nn = nand_nxor();
  auto m = wire_maze(6, "1");
  auto r = run_to_terminal(Assembly(m), nn);
  Assembly replay(m);
  for (const auto& p : r.assembly.trace()) replay = attach(replay, p.pos, r.assembly.tile_of(p));
  CHECK(same_tiles(replay, r.assembly));
}

TEST_CASE("engine reuse with overlays") {
  auto nn = nand_nxor();
  Maze m;
  for (int x = 0; x < 5; ++x) {
    m.add_cell({x, 1});
    m.set_glue({x, 1}, Side::S, "1");
  }
  m.add_cell({6, 0});
  m.add_cell({5, 1});
  m.add_cell({5, -1});
  m.add_input_site({5, 0});
  Engine eng(m, nn);
  for (int bit = 0; bit <= 1; ++bit) {
    eng.reset();
    eng.overlay({5, 0}, nn.at(bit ? "11" : "10"));
    eng.run({});
    CHECK(eng.glue_at(EdgeSite({0, 0}, Side::W)) == std::to_string(bit));
    CHECK(eng.trace().size() == 5);
  }
}

TEST_CASE("maze validation and formats") {
  Maze m;
  m.add_cell({0, 0});
  m.add_cell({1, 0});
  m.set_glue({0, 0}, Side::E, "1");
  CHECK_THROWS_AS(m.validate(), Error);
  CHECK_THROWS_AS(m.set_glue({0, 0}, Side::E, "0"), Error);

  auto text = "mawatam-maze v1\ncell 0 0\nglue 0 0 W 1\ninput -1 1\noutput -3 0 W\n";
  auto loaded = load_maze(text);
  CHECK(loaded.glue({0, 0}, Side::W) == GlueLabel("1"));
  CHECK(loaded.input_sites().size() == 1);
  CHECK(load_maze(save_maze(loaded)).glues() == loaded.glues());
  CHECK_THROWS_AS(load_maze("mawatam-maze v1\ncell 0\n"), Error);
  CHECK_THROWS_AS(load_maze("cell 0 0\n"), Error);

  auto r = run_to_terminal(Assembly(wire_maze(2, "1")), nand_nxor());
  auto dump = dump_assembly(r.assembly);
  CHECK(dump.rfind("mawatam-assembly v1\ntile 1 0 11\ntile 0 0 11\n", 0) == 0);
}
