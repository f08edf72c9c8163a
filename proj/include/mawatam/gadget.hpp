#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mawatam/engine.hpp"
#include "mawatam/maze.hpp"
#include "mawatam/tile.hpp"

namespace mawatam {

enum class PortDir { in, out };
enum class Axis { h, v };
enum class Polarity { plain, negated };
enum class ParityClass { even, odd, none };

/// A gadget-local port. In-ports are the E (horizontal) or N (vertical) side of
/// the first gadget cell a signal enters; out-ports are the W or S side of the
/// cell whose tile carries the result.
struct Port {
  Coord cell;
  Side side = Side::E;
  PortDir dir = PortDir::in;
  Axis axis = Axis::h;
  Polarity polarity = Polarity::plain;
  ParityClass parity = ParityClass::none;

  EdgeSite edge() const { return {cell, side}; }
  // The cell outside the gadget that feeds an in-port / reads an out-port.
  Coord outside() const { return cell.step(side); }
  friend bool operator==(const Port&, const Port&) = default;
};

struct Gadget {
  std::string name;
  std::string tileset_id;
  Maze fragment;
  std::vector<Port> ports;
  // One table per out-port, indexed by the in-port bits (first in-port most
  // significant); a zero-input gadget has one-character tables.
  std::vector<std::string> truth;
  int tiles = 0;  // declared tile count

  std::vector<Port> inputs() const;
  std::vector<Port> outputs() const;
};

std::string save_gadget(const Gadget& g);
Gadget load_gadget(std::string_view text, std::string name = "gadget");

// Translated copy (fragment and ports).
Gadget instantiate(const Gadget& g, Coord offset);
// Adds a fragment's cells and glues to `into`; a shared cell is an overlap error.
void compose(Maze& into, const Maze& fragment);

struct GadgetCase {
  std::vector<int> inputs;
  std::vector<std::string> outputs;  // glue read at each out-port
  std::size_t tiles = 0;
  std::size_t mismatches = 0;
  std::vector<std::pair<Coord, std::string>> trace;
};

struct ValidationReport {
  bool ok = true;
  std::string failure;  // names the input assignment and position
  std::size_t max_tiles = 0;
  std::size_t min_tiles = 0;
  std::vector<GadgetCase> cases;
};

// The maze used to exercise a gadget: fragment plus a driver seed cell outside
// every in-port presenting the (polarity-adjusted) input bit.
Maze gadget_harness(const Gadget& g, const std::vector<int>& inputs);

ValidationReport check_gadget(const Gadget& g, const TileSet& ts, const RunOptions& opt = {});
// Throws validation-failure when check_gadget fails.
ValidationReport validate_gadget(const Gadget& g, const TileSet& ts, const RunOptions& opt = {});

/// Named gadget variants for one tile set.
class GadgetLibrary {
 public:
  GadgetLibrary() = default;
  explicit GadgetLibrary(std::string tileset_id) : tileset_id_(std::move(tileset_id)) {}

  const std::string& tileset_id() const { return tileset_id_; }
  void add(Gadget g);
  bool has(const std::string& role) const { return gadgets_.count(role) != 0; }
  const Gadget& get(const std::string& role) const;  // throws invalid-argument
  const std::map<std::string, Gadget>& all() const { return gadgets_; }

  // Two-input gate for a 4-bit table, e.g. gate("0001") is AND.
  const Gadget& gate(const std::string& table) const { return get("gate-" + table); }

  Gadget hwire(int length) const;
  Gadget vwire(int length) const;

 private:
  std::string tileset_id_;
  std::map<std::string, Gadget> gadgets_;
};

// tileset-id is "nand-nxor" or "collatz".
const GadgetLibrary& builtin_library(const std::string& tileset_id);

std::string gate_name(const std::string& table);  // "AND", "TT1101", ...

}  // namespace mawatam
