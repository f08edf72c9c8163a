#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mawatam/assembly.hpp"

namespace mawatam {

enum class OrderPolicy { raster, random };

struct RunOptions {
  OrderPolicy order = OrderPolicy::raster;
  std::uint64_t rng_seed = 0;
  MatchMode mode = MatchMode::permissive;
  std::size_t max_steps = 1'000'000;
};

struct RunReport {
  std::size_t steps = 0;
  bool nondeterministic = false;
  std::optional<Coord> first_nondeterminism;
  std::size_t mismatches = 0;
  std::optional<Coord> first_mismatch;
};

struct RunResult {
  Assembly assembly;
  RunReport report;
};

// Grows from `start` until no tile can attach. Throws step-budget-exceeded.
RunResult run_to_terminal(const Assembly& start, const TileSet& ts, const RunOptions& opt = {});

/// Dense simulator over the maze's bounding box. Growth can never leave that
/// box: a cell outside it has at most one occupied neighbour.
/// Reusable: reset() returns to the seed, overlay() adds per-run seed tiles.
class Engine {
 public:
  Engine(const Maze& maze, const TileSet& ts);

  void reset();
  // Occupies an empty in-box cell with a fixed tile until the next reset().
  void overlay(Coord c, const TileType& t);
  // Places a grown tile without checks (used to resume from a partial assembly).
  void preplace(Coord c, int tile);

  RunReport run(const RunOptions& opt);

  // Tile index grown at c, or -1.
  int tile_at(Coord c) const;
  // Same rule as the free glue_at(); returns "-" for null.
  const std::string& glue_at(EdgeSite e) const;

  // (position, tile index) in placement order.
  const std::vector<std::pair<Coord, int>>& trace() const { return trace_; }
  const TileSet& tileset() const { return *ts_; }
  const Bounds& box() const { return box_; }

  Assembly to_assembly(std::shared_ptr<const Maze> maze) const;

 private:
  int intern(const GlueLabel& g);
  int idx(Coord c) const { return (c.x - pad_.min_x) * pad_h_ + (c.y - pad_.min_y); }
  Coord coord(int i) const { return {i / pad_h_ + pad_.min_x, i % pad_h_ + pad_.min_y}; }
  int exposed(int i, Side s) const;
  // Candidate tiles at cell i; returns count and fills first/mismatch details.
  int candidates(int i, MatchMode mode, int* out, int cap) const;
  void place(int i, int tile, RunReport& rep);

  const TileSet* ts_;
  Bounds box_, pad_;
  int pad_h_ = 0;
  std::unordered_map<std::string, int> glue_ids_;
  std::vector<std::string> glue_names_;
  std::vector<std::array<int, 4>> tile_glues_;

  // Base seed state and per-run state.
  std::vector<std::uint8_t> base_kind_, kind_;  // 0 empty, 1 seed, 2 tile
  std::vector<std::int32_t> base_glue_, glue_;  // 4 per cell: glue shown on that side
  std::vector<std::int16_t> tile_;
  std::vector<int> touched_;
  std::vector<std::pair<Coord, int>> trace_;
};

}  // namespace mawatam
