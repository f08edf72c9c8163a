#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace mawatam {

enum class GateKind { input, output, const0, const1, not_, id, fanout, crossover, table };

struct Source {
  int gate = -1;
  int pin = 0;
  friend bool operator==(const Source&, const Source&) = default;
};

struct Gate {
  GateKind kind = GateKind::id;
  std::string table;  // TABLE only: 4 bits indexed by 2*in0 + in1
  std::vector<Source> in;
  std::string name;

  int in_arity() const;
  int out_arity() const;
};

std::string kind_name(const Gate& g);  // "INPUT", "TT1101", ...

/// A gate DAG. Every gate output pin feeds at most one wire; FANOUT gates
/// duplicate signals.
struct Circuit {
  std::vector<Gate> gates;
  std::vector<int> inputs;  // INPUT gate ids in input order
  int output = -1;          // the OUTPUT gate

  int add(Gate g);
  // Gate ids in a topological order; throws cycle-detected.
  std::vector<int> topo_order() const;
  // Throws arity-violation / cycle-detected / invalid-argument on a malformed circuit.
  void validate() const;
  std::size_t count(GateKind k) const;
};

// Netlist: `in a`, `const c 0|1`, `x = OP(args)` with OP in NOT AND OR XOR NAND
// NOR NXOR ID TTbbbb, `out x`. A signal used more than once is split by FANOUTs.
Circuit parse_netlist(std::string_view text);

// Throws length-mismatch.
int evaluate(const Circuit& c, const std::vector<int>& input);

/// Layered drawing: layers[i] lists gate ids top to bottom. The output pins of
/// layer i, read top to bottom (pin 0 above pin 1), feed the input pins of
/// layer i+1 in the same order. IDs carry wires across layers and CROSSOVER
/// sublayers realise every crossing.
struct LayeredPlan {
  Circuit circuit;
  std::vector<std::vector<int>> layers;

  int depth() const { return static_cast<int>(layers.size()); }
  // Throws invalid-argument if the adjacency property above does not hold.
  void check() const;
};

struct PlanarCircuit {
  Circuit circuit;  // source gates (dead ones pruned) plus CROSSOVERs
  LayeredPlan plan;
  int crossovers = 0;
};

PlanarCircuit planarize(const Circuit& c);
const LayeredPlan& layer(const PlanarCircuit& p);

// A random well-formed netlist: `inputs` inputs, about `gates` two-input or NOT
// gates, one output.
std::string random_netlist(std::mt19937_64& rng, int inputs, int gates);

}  // namespace mawatam
