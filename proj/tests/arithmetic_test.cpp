#include <random>

#include "doctest.h"
#include "mawatam/arithmetic.hpp"
#include "mawatam/error.hpp"
#include "mawatam/tilesets.hpp"

using namespace mawatam;

namespace {

// Direct iteration with machine integers, independent of the GMP code path.
unsigned long T_direct(unsigned long x, int n) {
  while (n-- > 0) x = (x % 2 == 0) ? x / 2 : (3 * x + 1) / 2;
  return x;
}

std::string north_reading(const Maze& m) {
  std::string s;
  int k = -1;
  while (m.has_cell({k - 1, 0})) --k;
  for (int x = k; x <= -1; ++x) s += m.glue({x, 0}, Side::S).str();
  return s;
}

int s_glues(const Maze& m) {
  int count = 0;
  for (const auto& [k, g] : m.glues()) count += g == GlueLabel("S");
  return count;
}

std::string base3(unsigned long long v) {
  if (v == 0) return "0";
  std::string s;
  for (; v; v /= 3) s.insert(s.begin(), char('0' + v % 3));
  return s;
}

}  // namespace

TEST_CASE("collatz oracle") {
  CHECK(collatz_oracle(75, 7) == 16);
  CHECK(collatz_oracle(123, 0) == 123);
  CHECK(collatz_oracle(1, 2) == 1);
  for (unsigned long x = 1; x < 500; ++x) CHECK(collatz_oracle(x, 11) == T_direct(x, 11));
}

TEST_CASE("collatz seed shapes") {
  auto s = collatz_seed(75, 7);
  CHECK(north_reading(s.maze) == "1001011");
  CHECK(s_glues(s.maze) == 7);
  auto one = collatz_seed(1, 0);
  CHECK(north_reading(one.maze) == "1");
  CHECK(s_glues(one.maze) == 0);
  auto six = collatz_seed(6, 3);
  CHECK(north_reading(six.maze) == "110");
  CHECK(s_glues(six.maze) == 3);
  CHECK_THROWS_AS(collatz_seed(0, 3), Error);
}

TEST_CASE("trajectory assembly for 75") {
  auto r = run_collatz(75, 7);
  CHECK(r.value == 16);
  CHECK(r.digits == "121");
  CHECK_FALSE(r.report.nondeterministic);
}

TEST_CASE("zero steps read back x") {
  for (unsigned long x = 1; x < 256; ++x) CHECK(run_collatz(x, 0).value == x);
}

TEST_CASE("trajectories match the oracle for small x") {
  for (unsigned long x = 1; x < 1024; x += 7)
    for (int n = 1; n <= 20; n += 3) {
      auto r = run_collatz(x, n);
      REQUIRE_MESSAGE(r.value == T_direct(x, n), "x=" << x << " n=" << n);
    }
}

TEST_CASE("powers of two") {
  const int m = 12;
  auto maze = std::make_shared<Maze>(powers2_seed(m));
  auto r = run_to_terminal(Assembly(maze), collatz());
  CHECK_FALSE(r.report.nondeterministic);
  const char* caption[] = {"1", "2", "11", "22"};
  for (int k = 0; k < 4; ++k) {
    std::string digits;
    auto v = read_digits(r.assembly, powers2_column(m, k), &digits);
    CHECK(v == (1 << k));
    CHECK(digits.substr(digits.find_first_not_of('0')) == caption[k]);
  }
  for (int k = 0; k < m; ++k) CHECK(read_digits(r.assembly, powers2_column(m, k)) == (1ul << k));

  auto small = powers2_seed(1);
  CHECK(small.glue({-1, 0}, Side::E) == GlueLabel("0"));
  CHECK(small.glue({0, -1}, Side::N) == GlueLabel("1"));
  auto four = powers2_seed(4);
  for (int i = 0; i < 4; ++i) CHECK(four.glue({-1, i}, Side::E) == GlueLabel("0"));
  CHECK(four.glue({0, -1}, Side::N) == GlueLabel("1"));
  for (int i = 1; i < 4; ++i) CHECK(four.glue({i, -1}, Side::N) == GlueLabel("0"));
}

TEST_CASE("read_digits rejects non-digits") {
  auto maze = std::make_shared<Maze>(powers2_seed(3));
  Assembly a(maze);  // nothing grown: edges are empty
  CHECK_THROWS_AS(read_digits(a, powers2_column(3, 0)), Error);
}

TEST_CASE("rectangle identity") {
  auto cz = collatz();
  auto single = [&](const char* name) {
    auto m = std::make_shared<Maze>();
    Assembly a(m);
    a.place({0, 0}, cz.at(name));
    return rectangle_identity(a, {{0, 0}, 1, 1});
  };
  auto five = single("5");
  CHECK(five.lhs == 5);
  CHECK(five.rhs == 5);
  CHECK(single("0").lhs == 0);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    int w = 1 + rng() % 12, h = 1 + rng() % 12;
    auto m = std::make_shared<Maze>();
    m->add_cell({w, h});
    for (int x = 0; x < w; ++x) {
      m->add_cell({x, h});
      m->set_glue({x, h}, Side::S, std::to_string(rng() % 2));
    }
    for (int y = 0; y < h; ++y) {
      m->add_cell({w, y});
      m->set_glue({w, y}, Side::W, std::to_string(rng() % 3));
    }
    auto r = run_to_terminal(Assembly(m), cz);
    auto c = rectangle_identity(r.assembly, {{0, 0}, w, h});
    CHECK(c.holds);
  }
  Assembly empty(std::make_shared<Maze>());
  CHECK_THROWS_AS(rectangle_identity(empty, {{0, 0}, 2, 2}), Error);
}

TEST_CASE("erdos scan") {
  CHECK(erdos_scan(8) == std::set<unsigned>{0, 2, 8});
  CHECK(erdos_scan(64) == std::set<unsigned>{0, 2, 8});
  CHECK(erdos_scan(3) == std::set<unsigned>{0, 2});
  for (unsigned k = 0; k < 40; ++k) {
    bool no_two = base3(1ull << k).find('2') == std::string::npos;
    CHECK(erdos_scan_tiles(k).count(k) == (no_two ? 1u : 0u));
  }
}
