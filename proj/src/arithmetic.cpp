#include "mawatam/arithmetic.hpp"

#include <algorithm>

#include "mawatam/error.hpp"
#include "mawatam/tilesets.hpp"

namespace mawatam {

Natural collatz_oracle(Natural x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (mpz_even_p(x.get_mpz_t())) x /= 2;
    else x = (3 * x + 1) / 2;
  }
  return x;
}

Natural read_digits(const Assembly& a, const DigitReading& r) { return read_digits(a, r, nullptr); }

Natural read_digits(const Assembly& a, const DigitReading& r, std::string* digits) {
  Natural v = 0;
  std::string seen;
  for (const auto& e : r.edges) {
    GlueLabel g = glue_at(a, e);
    if (std::find(r.skip.begin(), r.skip.end(), g) != r.skip.end()) continue;
    const auto& s = g.str();
    if (s.size() != 1 || s[0] < '0' || s[0] - '0' >= r.base)
      throw Error(Errc::non_digit_glue, "'" + s + "' at (" + std::to_string(e.cell().x) + "," +
                                            std::to_string(e.cell().y) + ")");
    v = v * r.base + (s[0] - '0');
    seen += s;
  }
  if (digits) *digits = seen;
  return v;
}

CollatzSeed collatz_seed(const Natural& x, std::size_t n) {
  if (x < 1) throw Error(Errc::invalid_argument, "collatz seed needs x >= 1");
  const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  CollatzSeed seed;
  Maze& m = seed.maze;

  Natural north = x;
  std::vector<std::string> east;  // top to bottom
  std::size_t width = bits;
  if (n >= bits) {
    width = n;
  } else if (n > 0) {
    // Smallest d with x div 3^d < 2^n.
    Natural p3 = 1, limit = Natural(1) << n;
    while (x / p3 >= limit) p3 *= 3;
    north = x / p3;
    Natural low = x % p3;
    std::string t = low.get_str(3);
    std::size_t d = 0;
    for (Natural q = p3; q > 1; q /= 3) ++d;
    t.insert(0, d - std::min(d, t.size()), '0');
    for (char c : t) east.emplace_back(1, c);
    width = n;
  }
  for (std::size_t i = 0; i < n; ++i) east.emplace_back("S");

  seed.columns = static_cast<int>(width);
  seed.rows = static_cast<int>(east.size());
  m.add_cell({0, 0});
  for (int k = 0; k < seed.columns; ++k) {
    Coord c{-1 - k, 0};
    m.add_cell(c);
    m.set_glue(c, Side::S, mpz_tstbit(north.get_mpz_t(), k) ? "1" : "0");
  }
  for (int r = 0; r < seed.rows; ++r) {
    Coord c{0, -1 - r};
    m.add_cell(c);
    m.set_glue(c, Side::W, east[r]);
  }

  seed.result.base = 3;
  seed.result.skip = {GlueLabel("S")};
  if (n == 0) {
    // Nothing grows; the answer is the north arm itself, MSB at the west end.
    seed.rows = 0;
    seed.result.base = 2;
    for (int k = seed.columns - 1; k >= 0; --k)
      seed.result.edges.emplace_back(Coord{-1 - k, 0}, Side::S);
  } else {
    for (int r = 0; r < seed.rows; ++r)
      seed.result.edges.emplace_back(Coord{-seed.columns, -1 - r}, Side::W);
  }
  return seed;
}

CollatzRun run_collatz(const Natural& x, std::size_t n) {
  static const TileSet ext = collatz(true);
  auto seed = collatz_seed(x, n);
  auto maze = std::make_shared<Maze>(seed.maze);
  auto res = run_to_terminal(Assembly(maze), ext);
  if (res.report.nondeterministic)
    throw Error(Errc::nondeterminism, "trajectory assembly is not directed");
  CollatzRun out{0, "", std::move(res.assembly), res.report};
  out.value = read_digits(out.assembly, seed.result, &out.digits);
  return out;
}

Maze powers2_seed(int m) {
  if (m < 1) throw Error(Errc::invalid_argument, "powers2 seed needs m >= 1");
  Maze z;
  z.add_cell({-1, -1});
  for (int i = 0; i < m; ++i) {
    z.add_cell({-1, i});
    z.set_glue({-1, i}, Side::E, "0");
    z.add_cell({i, -1});
    z.set_glue({i, -1}, Side::N, i == 0 ? "1" : "0");
  }
  return z;
}

DigitReading powers2_column(int m, int k) {
  DigitReading r;
  r.base = 3;
  for (int y = m - 1; y >= 0; --y) r.edges.emplace_back(Coord{k, y}, Side::E);
  return r;
}

RectangleCheck rectangle_identity(const Assembly& a, const Rect& r) {
  for (int x = 0; x < r.w; ++x)
    for (int y = 0; y < r.h; ++y)
      if (!a.tile_at({r.corner.x + x, r.corner.y + y}))
        throw Error(Errc::rect_not_fully_tiled,
                    "(" + std::to_string(r.corner.x + x) + "," + std::to_string(r.corner.y + y) + ")");
  auto side = [&](Side s, int base) {
    DigitReading d;
    d.base = base;
    const int top = r.corner.y + r.h - 1;
    if (s == Side::N || s == Side::S) {
      int y = s == Side::N ? top : r.corner.y;
      for (int x = r.corner.x; x < r.corner.x + r.w; ++x) d.edges.emplace_back(Coord{x, y}, s);
    } else {
      int x = s == Side::E ? r.corner.x + r.w - 1 : r.corner.x;
      for (int y = top; y >= r.corner.y; --y) d.edges.emplace_back(Coord{x, y}, s);
    }
    return read_digits(a, d);
  };
  RectangleCheck c;
  c.north = side(Side::N, 2);
  c.south = side(Side::S, 2);
  c.east = side(Side::E, 3);
  c.west = side(Side::W, 3);
  Natural p3, p2;
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(r.h));
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(r.w));
  c.lhs = p3 * c.north + c.east;
  c.rhs = p2 * c.west + c.south;
  c.holds = c.lhs == c.rhs;
  return c;
}

std::set<unsigned> erdos_scan_tiles(unsigned n_max) {
  // Grow the powers-of-2 table one column at a time, choosing every tile from
  // its south-west corner exactly as the assembly does.
  const TileSet cz = collatz(false);
  const TileType* by_sw[2][3] = {};
  for (int s = 0; s < 2; ++s)
    for (int w = 0; w < 3; ++w) {
      auto p = unique_tile_for(cz, {Side::S, Side::W, std::to_string(s), std::to_string(w)});
      by_sw[s][w] = p.tile ? cz.find(p.tile->name) : nullptr;
      if (!by_sw[s][w]) throw Error(Errc::nondeterminism, "collatz set is not (S,W)-deterministic");
    }
  std::set<unsigned> out;
  std::vector<int> col;  // east glues of the previous column, bottom first
  for (unsigned k = 0; k <= n_max; ++k) {
    int carry = k == 0 ? 1 : 0;  // north glue of the bottom arm
    std::vector<int> next;
    std::size_t rows = col.size() + 1;
    for (std::size_t r = 0; r < rows; ++r) {
      int w = r < col.size() ? col[r] : 0;
      const TileType* t = by_sw[carry][w];
      next.push_back(t->glue(Side::E).str()[0] - '0');
      carry = t->glue(Side::N).str()[0] - '0';
    }
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    if (std::find(next.begin(), next.end(), 2) == next.end()) out.insert(k);
    col = std::move(next);
  }
  return out;
}

std::set<unsigned> erdos_scan_bigint(unsigned n_max) {
  std::set<unsigned> out;
  Natural p = 1;
  for (unsigned k = 0; k <= n_max; ++k, p *= 2)
    if (p.get_str(3).find('2') == std::string::npos) out.insert(k);
  return out;
}

std::set<unsigned> erdos_scan(unsigned n_max) {
  auto a = erdos_scan_tiles(n_max);
  auto b = erdos_scan_bigint(n_max);
  if (a != b) throw Error(Errc::validation_failure, "tile scan and base conversion disagree");
  return a;
}

}  // namespace mawatam
