// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "mawatam/arithmetic.hpp"
#include "mawatam/engine.hpp"
#include "mawatam/error.hpp"
#include "mawatam/formats.hpp"
#include "mawatam/gadget.hpp"
#include "mawatam/layout.hpp"
#include "mawatam/search.hpp"
#include "mawatam/tilesets.hpp"

using namespace mawatam;

namespace {

const char* kTilesets[] = {"nand-nxor", "collatz"};

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int n, const char* title, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = dt < limit_s;
  bool pass = o.ok && in_time;
  failures += !pass;
  std::printf("criterion %d: %s  %s  [%s; %.2fs < %.0fs%s]\n", n, pass ? "PASS" : "FAIL", title, o.detail.c_str(),
              dt, limit_s, in_time ? "" : " EXCEEDED");
  std::fflush(stdout);
}

std::vector<int> bits_of(unsigned v, std::size_t n) {
  std::vector<int> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (v >> (n - 1 - i)) & 1;
  return b;
}

// Placed tiles sorted by position: equal strings mean equal terminal assemblies.
std::string canonical(std::vector<std::pair<Coord, std::string>> placed) {
  std::sort(placed.begin(), placed.end());
  std::ostringstream o;
  for (const auto& [c, name] : placed) o << c.x << ' ' << c.y << ' ' << name << '\n';
  return o.str();
}

std::string canonical(const Assembly& a) {
  std::vector<std::pair<Coord, std::string>> placed;
  for (const auto& p : a.trace()) placed.emplace_back(p.pos, a.tile_of(p).name);
  return canonical(placed);
}

std::string canonical(const Engine& e) {
  std::vector<std::pair<Coord, std::string>> placed;
  for (const auto& [c, t] : e.trace()) placed.emplace_back(c, e.tileset().tiles()[t].name);
  return canonical(placed);
}

// Explores every attachment order with the checked single-step rule; returns
// the set of terminal assemblies reached.
std::set<std::string> all_terminals(const Maze& m, const TileSet& ts, std::size_t* states) {
  std::set<std::string> terminals;
  std::unordered_set<std::string> seen;
  std::queue<Assembly> todo;
  todo.push(Assembly(std::make_shared<const Maze>(m)));
  seen.insert(canonical(todo.front()));
  while (!todo.empty()) {
    Assembly a = std::move(todo.front());
    todo.pop();
    auto ps = frontier(a, ts);
    if (ps.empty()) terminals.insert(canonical(a));
    for (Coord p : ps)
      for (const TileType* t : attachable_tiles(a, p, ts)) {
        Assembly b = attach(a, p, *t);
        if (seen.insert(canonical(b)).second) todo.push(std::move(b));
      }
  }
  if (states) *states = seen.size();
  return terminals;
}

Natural from_digits(const std::string& digits, int base) {
  Natural v = 0;
  for (char ch : digits) v = v * base + (ch - '0');
  return v;
}

unsigned long T_direct(unsigned long x, std::size_t n) {
  while (n-- > 0) x = (x % 2 == 0) ? x / 2 : (3 * x + 1) / 2;
  return x;
}

}  // namespace

int main() {
  criterion(1, "tile sets match their defining tables", 1, [] {
    Outcome o;
    auto nn = nand_nxor();
    std::map<std::string, std::array<std::string, 4>> want;  // N E S W
    for (int n = 0; n < 2; ++n)
      for (int e = 0; e < 2; ++e)
        want[std::to_string(n) + std::to_string(e)] = {std::to_string(n), std::to_string(e),
                                                       std::to_string(!(n && e)), std::to_string(n == e)};
    std::map<std::string, std::array<std::string, 4>> got;
    for (const auto& t : nn.tiles())
      got[t.name] = {t.glue(Side::N).str(), t.glue(Side::E).str(), t.glue(Side::S).str(), t.glue(Side::W).str()};
    o.ok &= nn.size() == 4 && got == want;
    want.clear();
    got.clear();
    for (int x = 0; x < 6; ++x)
      want[std::to_string(x)] = {std::to_string(x / 3), std::to_string(x % 3), std::to_string(x % 2),
                                 std::to_string(x / 2)};
    auto cz = collatz();
    for (const auto& t : cz.tiles())
      got[t.name] = {t.glue(Side::N).str(), t.glue(Side::E).str(), t.glue(Side::S).str(), t.glue(Side::W).str()};
    o.ok &= cz.size() == 6 && got == want;
    o.detail = "nand-nxor " + std::to_string(nn.size()) + " tiles, collatz " + std::to_string(cz.size()) + " tiles";
    return o;
  });

  criterion(2, "gadget suite validates; gate and crossover tile counts", 10, [] {
    Outcome o;
    std::ostringstream d;
    const std::size_t gate_bound[] = {6, 14}, cross_exact[] = {34, 33};
    for (int i = 0; i < 2; ++i) {
      const auto& lib = builtin_library(kTilesets[i]);
      const TileSet ts = tileset_by_id(kTilesets[i]);
      RunOptions strict;
      strict.mode = MatchMode::strict;
      std::size_t max_gate = 0, gates = 0, others = 0;
      for (int v = 0; v < 16; ++v) {
        std::string table;
        for (int b = 3; b >= 0; --b) table += char('0' + ((v >> b) & 1));
        auto rep = check_gadget(lib.gate(table), ts, strict);
        o.ok &= rep.ok;
        gates += rep.ok;
        max_gate = std::max(max_gate, rep.max_tiles);
      }
      for (const auto& [name, g] : lib.all())
        if (name.rfind("gate-", 0) != 0) {
          auto rep = check_gadget(g, ts, strict);
          o.ok &= rep.ok;
          others += rep.ok;
        }
      auto cross = check_gadget(lib.get("crossover"), ts, strict);
      bool exact = cross.ok && cross.cases.size() == 4 && cross.min_tiles == cross_exact[i] &&
                   cross.max_tiles == cross_exact[i];
      o.ok &= exact && max_gate <= gate_bound[i];
      d << kTilesets[i] << ": " << gates << "/16 gates, max " << max_gate << " <= " << gate_bound[i]
        << ", crossover " << cross.max_tiles << " on " << cross.cases.size() << " inputs (want "
        << cross_exact[i] << "), " << others << " other gadgets ok; ";
    }
    o.detail = d.str();
    o.detail.resize(o.detail.size() - 2);
    return o;
  });

  const std::string prime_text = read_file(std::string(MAWATAM_DATA_DIR) + "/prime.ckt");
  criterion(3, "prime circuit end to end on both tile sets", 5, [&] {
    Outcome o;
    auto c = parse_netlist(prime_text);
    const std::set<unsigned> primes{0b010, 0b011, 0b101, 0b111};
    std::ostringstream d;
    for (const char* id : kTilesets) {
      auto m = compile(c, id);
      std::string row;
      for (unsigned v = 0; v < 8; ++v) {
        // Through the public path: encode, grow, read.
        Maze x = encode_input(m, bits_of(v, 3));
        auto res = run_to_terminal(Assembly(std::make_shared<const Maze>(x)), tileset_by_id(id));
        int out = read_output(res.assembly, m);
        o.ok &= !res.report.nondeterministic && out == static_cast<int>(primes.count(v));
        row += char('0' + out);
      }
      d << id << " " << row << " (110->" << row[6] << ", 111->" << row[7] << "); ";
    }
    o.detail = d.str();
    o.detail.resize(o.detail.size() - 2);
    return o;
  });

  criterion(4, "random circuits equal their netlists on every input", 600, [] {
    Outcome o;
    std::mt19937_64 rng(20240901);
    std::size_t circuits = 0, runs = 0, wrong = 0;
    for (int k = 0; k < 100; ++k) {
      const int n = 1 + k % 8, g = 1 + (k * 7) % 25;
      auto c = parse_netlist(random_netlist(rng, n, g));
      ++circuits;
      for (const char* id : kTilesets) {
        auto m = compile(c, id);
        MazeRunner r(m);
        for (unsigned v = 0; v < (1u << n); ++v) {
          auto bits = bits_of(v, n);
          auto rep = r.run(bits);
          ++runs;
          if (rep.nondeterministic || r.output() != evaluate(c, bits)) ++wrong;
        }
      }
    }
    o.ok = wrong == 0;
    o.detail = std::to_string(circuits) + " circuits x 2 tile sets, " + std::to_string(runs) + " runs, " +
               std::to_string(wrong) + " wrong";
    return o;
  });

  criterion(5, "confluence under random orders and full order enumeration", 600, [] {
    Outcome o;
    std::size_t gadget_runs = 0, maze_runs = 0, enumerated = 0, states = 0, flagged = 0, differ = 0;
    RunOptions rnd;
    rnd.order = OrderPolicy::random;
    for (const char* id : kTilesets) {
      const TileSet ts = tileset_by_id(id);
      for (const auto& [name, g] : builtin_library(id).all()) {
        const std::size_t k = g.inputs().size();
        for (unsigned v = 0; v < (1u << k); ++v) {
          Maze h = gadget_harness(g, bits_of(v, k));
          auto ref = run_to_terminal(Assembly(std::make_shared<const Maze>(h)), ts);
          const std::string want = canonical(ref.assembly);
          flagged += ref.report.nondeterministic;
          for (std::uint64_t s = 1; s <= 20; ++s) {
            rnd.rng_seed = s;
            auto r = run_to_terminal(Assembly(std::make_shared<const Maze>(h)), ts, rnd);
            ++gadget_runs;
            flagged += r.report.nondeterministic;
            differ += canonical(r.assembly) != want;
          }
          if (ref.assembly.size() <= 12) {
            std::size_t st = 0;
            auto terms = all_terminals(h, ts, &st);
            ++enumerated;
            states += st;
            differ += terms != std::set<std::string>{want};
          }
        }
      }
    }
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
      auto c = parse_netlist(random_netlist(rng, 1 + k % 4, 4 + k));
      for (const char* id : kTilesets) {
        auto m = compile(c, id);
        MazeRunner r(m);
        for (unsigned v = 0; v < (1u << c.inputs.size()); ++v) {
          auto bits = bits_of(v, c.inputs.size());
          flagged += r.run(bits).nondeterministic;
          const std::string want = canonical(r.engine());
          for (std::uint64_t s = 1; s <= 20; ++s) {
            rnd.rng_seed = s;
            flagged += r.run(bits, rnd).nondeterministic;
            ++maze_runs;
            differ += canonical(r.engine()) != want;
          }
        }
      }
    }
    o.ok = flagged == 0 && differ == 0 && enumerated > 0;
    o.detail = std::to_string(gadget_runs) + " gadget runs, " + std::to_string(maze_runs) +
               " runs on 20 compiled mazes, " + std::to_string(enumerated) + " small mazes enumerated (" +
               std::to_string(states) + " states); " + std::to_string(differ) + " differ, " +
               std::to_string(flagged) + " flagged";
    return o;
  });

  criterion(6, "Collatz trajectories", 60, [] {
    Outcome o;
    auto r = run_collatz(75, 7);
    o.ok = r.value == 16 && r.digits == "121";
    std::mt19937_64 rng(6);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      unsigned long x = static_cast<unsigned long>(rng() % (1u << 16));
      std::size_t n = rng() % 33;
      auto t = run_collatz(x, n);
      bad += t.value != T_direct(x, n) || t.report.nondeterministic;
    }
    o.ok &= bad == 0;
    o.detail = "T^7(75) = " + r.value.get_str() + " read as " + r.digits + "; " + std::to_string(bad) +
               "/200 random trajectories wrong";
    return o;
  });

  criterion(7, "powers of two in base 3 and the Erdos scan", 30, [] {
    Outcome o;
    const int m = 41;  // columns 0..40
    auto res = run_to_terminal(Assembly(std::make_shared<const Maze>(powers2_seed(m))), collatz());
    const char* caption[] = {"1", "2", "11", "22"};
    int bad = 0;
    for (int k = 0; k < m; ++k) {
      std::string digits;
      Natural v = read_digits(res.assembly, powers2_column(m, k), &digits);
      Natural p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
      auto nz = digits.find_first_not_of('0');
      std::string shown = nz == std::string::npos ? "0" : digits.substr(nz);
      bad += v != p || shown != p.get_str(3) || (k < 4 && shown != caption[k]);
    }
    auto hits = erdos_scan(64);
    o.ok = bad == 0 && !res.report.nondeterministic && hits == std::set<unsigned>{0, 2, 8};
    std::string h;
    for (unsigned e : hits) h += (h.empty() ? "" : ",") + std::to_string(e);
    o.detail = std::to_string(bad) + "/41 columns wrong; erdos_scan(64) = {" + h + "}";
    return o;
  });

  criterion(8, "rectangle identity 3^h N + E = 2^w W + S", 10, [] {
    Outcome o;
    auto cz = collatz();
    std::mt19937 rng(8);
    int bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
      int w = 1 + rng() % 12, h = 1 + rng() % 12;
      auto m = std::make_shared<Maze>();
      for (int x = 0; x < w; ++x) m->set_glue({x, h}, Side::S, std::to_string(rng() % 2));
      for (int y = 0; y < h; ++y) m->set_glue({w, y}, Side::W, std::to_string(rng() % 3));
      for (int x = 0; x < w; ++x) m->add_cell({x, h});
      for (int y = 0; y < h; ++y) m->add_cell({w, y});
      auto res = run_to_terminal(Assembly(m), cz);
      // Side readings straight from the placed tiles: west/north end most significant.
      std::string N, S, E, W;
      for (int x = 0; x < w; ++x) {
        N += res.assembly.tile_at({x, h - 1})->glue(Side::N).str();
        S += res.assembly.tile_at({x, 0})->glue(Side::S).str();
      }
      for (int y = h - 1; y >= 0; --y) {
        E += res.assembly.tile_at({w - 1, y})->glue(Side::E).str();
        W += res.assembly.tile_at({0, y})->glue(Side::W).str();
      }
      Natural p3, p2;
      mpz_ui_pow_ui(p3.get_mpz_t(), 3, h);
      mpz_ui_pow_ui(p2.get_mpz_t(), 2, w);
      Natural lhs = p3 * from_digits(N, 2) + from_digits(E, 3);
      Natural rhs = p2 * from_digits(W, 3) + from_digits(S, 2);
      auto lib = rectangle_identity(res.assembly, {{0, 0}, w, h});
      bad += lhs != rhs || !lib.holds || lib.lhs != lhs || lib.rhs != rhs;
    }
    o.ok = bad == 0;
    o.detail = std::to_string(100 - bad) + "/100 rectangles exact";
    return o;
  });

  criterion(9, "gate-seed search recovers a Collatz AND", 600, [] {
    Outcome o;
    SearchStats stats;
    auto g = search_gate_seed(collatz(), "collatz", "0001", 3, 3, GateConvention::east, &stats);
    if (!g) return Outcome{false, "no seed found"};
    auto rep = check_gadget(*g, collatz());
    o.ok = rep.ok && rep.max_tiles <= 14;
    o.detail = "AND with " + std::to_string(rep.max_tiles) + " tiles (<= 14) within 3x3, east inputs; " +
               std::to_string(stats.candidates) + " candidates";
    return o;
  });

  return failures ? 1 : 0;
}
