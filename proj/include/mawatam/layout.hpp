#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mawatam/circuit.hpp"
#include "mawatam/engine.hpp"
#include "mawatam/gadget.hpp"

namespace mawatam {

struct GadgetPlacement {
  std::string role;  // library name, e.g. "gate-0001", "crossover"
  Coord offset;
  int plan_gate = -1;
};

enum class SegmentKind { horizontal, vertical };

struct Segment {
  SegmentKind kind = SegmentKind::horizontal;
  Coord from, to;  // first and last tile, inclusive
  bool negates = false;  // odd number of negating tiles on the segment
};

struct Correction {
  Coord at;          // first (east-most) tile
  std::string kind;  // "wire", or the parity fixer: "not" (NAND-NXOR), "buffer" (Collatz)
};

/// One wire between a gadget out-port (or source) and the next in-port, within
/// one layer band: horizontal westward runs joined by W->S and S->W turns.
struct Route {
  int plan_layer = 0;
  std::vector<Segment> segments;
  std::optional<Correction> correction;
};

struct RoutedLayout {
  std::string tileset_id;
  std::vector<GadgetPlacement> placements;
  std::vector<Route> routes;
  Maze maze;                      // seed, input sites and output edge included
  std::vector<Coord> input_sites;  // one per circuit input, in order
  EdgeSite output;
  // Planned tile cells -> placement index, or -1 for wiring.
  std::unordered_map<Coord, int, CoordHash> owner;
};

struct Accounting {
  std::map<int, std::size_t> per_gadget;  // placement index -> tiles placed
  std::size_t wire_tiles = 0;
  std::size_t total = 0;
  std::size_t unplanned = 0;      // tiles outside every planned cell (must be 0)
  std::size_t max_gate = 0;       // over TABLE and FANOUT gadgets
  std::vector<std::size_t> crossovers;  // tiles per crossover
};

struct CompiledMaze {
  std::string tileset_id;
  Circuit circuit;  // the source circuit
  PlanarCircuit planar;
  RoutedLayout layout;
  Accounting accounting;

  const Maze& maze() const { return layout.maze; }
  const std::vector<Coord>& input_sites() const { return layout.input_sites; }
  EdgeSite output_edge() const { return layout.output; }
};

// Throws unroutable when two parts of the layout claim the same cell.
RoutedLayout route(const LayeredPlan& plan, const GadgetLibrary& lib);
CompiledMaze compile(const Circuit& c, const std::string& tileset_id, const GadgetLibrary& lib);
inline CompiledMaze compile(const Circuit& c, const std::string& tileset_id) {
  return compile(c, tileset_id, builtin_library(tileset_id));
}

// The tile written into an input site for a bit.
TileType input_tile(const std::string& tileset_id, int bit);

// Seed with one input tile at every site (throws length-mismatch).
Maze encode_input(const CompiledMaze& m, const std::vector<int>& bits);
// Same for any maze with input sites.
Maze place_inputs(const Maze& m, const std::string& tileset_id, const std::vector<int>& bits);
// Throws output-not-reached when the output edge carries no bit.
int read_output(const Assembly& terminal, const CompiledMaze& m);

/// Reusable simulator for one compiled maze: one engine, reset per input.
class MazeRunner {
 public:
  explicit MazeRunner(const CompiledMaze& m);
  RunReport run(const std::vector<int>& bits, const RunOptions& opt = {});
  int output() const;  // after run(); throws output-not-reached
  const Engine& engine() const { return engine_; }

 private:
  const CompiledMaze* m_;
  TileSet ts_;
  Engine engine_;
  TileType tiles_[2];
};

}  // namespace mawatam
