#pragma once

#include <gmpxx.h>

#include <set>
#include <string>
#include <vector>

#include "mawatam/assembly.hpp"
#include "mawatam/engine.hpp"
#include "mawatam/maze.hpp"

namespace mawatam {

using Natural = mpz_class;

// T(x) = x/2 for even x, (3x+1)/2 for odd x, iterated n times.
Natural collatz_oracle(Natural x, std::size_t n);

/// Edges read as digits, most significant first; labels in `skip` are ignored.
struct DigitReading {
  std::vector<EdgeSite> edges;
  int base = 3;
  std::vector<GlueLabel> skip;
};

Natural read_digits(const Assembly& a, const DigitReading& r);  // throws non-digit-glue
// Same, also returning the digit string that was read (skipped labels removed).
Natural read_digits(const Assembly& a, const DigitReading& r, std::string* digits);

struct CollatzSeed {
  Maze maze;
  DigitReading result;  // where T^n(x) appears once the assembly is terminal
  int columns = 0;      // width of the north arm = number of steps performed
  int rows = 0;         // height of the east arm
};

// North-east L seed. Tiles grow in x in [-columns, -1], y in [-rows, -1]; the
// north arm (row 0) carries binary digits LSB east, the east arm (column 0)
// carries "S" markers, one per step. For n >= bitlen(x) the north arm is x
// padded to n bits. For 1 <= n < bitlen(x) the north arm carries the top part
// L = x div 3^d in n bits and the east arm starts with the d ternary digits of
// x mod 3^d, which the assembly treats as the same number 3^d L + (x mod 3^d).
CollatzSeed collatz_seed(const Natural& x, std::size_t n);

struct CollatzRun {
  Natural value;
  std::string digits;  // raw west reading, "S" removed
  Assembly assembly;
  RunReport report;
};

CollatzRun run_collatz(const Natural& x, std::size_t n);  // throws nondeterminism

// South-west L seed: m "0" glues up the west arm, "1" then m-1 "0" along the
// bottom arm. Column k (x = k) of the terminal assembly shows 2^k in base 3 on
// its east side.
Maze powers2_seed(int m);
DigitReading powers2_column(int m, int k);

/// Rectangle by south-west corner cell, width and height.
struct Rect {
  Coord corner;
  int w = 1;
  int h = 1;
};

struct RectangleCheck {
  Natural north, east, south, west;  // side readings
  Natural lhs, rhs;                  // 3^h N + E and 2^w W + S
  bool holds = false;
};

RectangleCheck rectangle_identity(const Assembly& a, const Rect& r);  // throws rect-not-fully-tiled

// Exponents n <= n_max such that 2^n has no ternary digit 2.
std::set<unsigned> erdos_scan_tiles(unsigned n_max);   // column-by-column tile rule
std::set<unsigned> erdos_scan_bigint(unsigned n_max);  // big-integer base conversion
std::set<unsigned> erdos_scan(unsigned n_max);         // both; throws if they differ

}  // namespace mawatam
