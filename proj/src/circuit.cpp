#include "mawatam/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "mawatam/error.hpp"
#include "mawatam/formats.hpp"

namespace mawatam {

int Gate::in_arity() const {
  switch (kind) {
    case GateKind::input:
    case GateKind::const0:
    case GateKind::const1: return 0;
    case GateKind::output:
    case GateKind::not_:
    case GateKind::id:
    case GateKind::fanout: return 1;
    case GateKind::crossover:
    case GateKind::table: return 2;
  }
  return 0;
}

int Gate::out_arity() const {
  switch (kind) {
    case GateKind::output: return 0;
    case GateKind::fanout:
    case GateKind::crossover: return 2;
    default: return 1;
  }
}

std::string kind_name(const Gate& g) {
  switch (g.kind) {
    case GateKind::input: return "INPUT";
    case GateKind::output: return "OUTPUT";
    case GateKind::const0: return "CONST0";
    case GateKind::const1: return "CONST1";
    case GateKind::not_: return "NOT";
    case GateKind::id: return "ID";
    case GateKind::fanout: return "FANOUT";
    case GateKind::crossover: return "CROSSOVER";
    case GateKind::table: return "TT" + g.table;
  }
  return "?";
}

int Circuit::add(Gate g) {
  gates.push_back(std::move(g));
  return static_cast<int>(gates.size()) - 1;
}

std::size_t Circuit::count(GateKind k) const {
  return static_cast<std::size_t>(
      std::count_if(gates.begin(), gates.end(), [k](const Gate& g) { return g.kind == k; }));
}

std::vector<int> Circuit::topo_order() const {
  const int n = static_cast<int>(gates.size());
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (int g = 0; g < n; ++g)
    for (const auto& s : gates[g].in) {
      ++indeg[g];
      succ[s.gate].push_back(g);
    }
  std::vector<int> order;
  for (int g = 0; g < n; ++g)
    if (indeg[g] == 0) order.push_back(g);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int t : succ[order[i]])
      if (--indeg[t] == 0) order.push_back(t);
  if (static_cast<int>(order.size()) != n) {
    for (int g = 0; g < n; ++g)
      if (indeg[g] > 0) throw Error(Errc::cycle_detected, "through '" + gates[g].name + "'");
  }
  return order;
}

void Circuit::validate() const {
  const int n = static_cast<int>(gates.size());
  std::map<std::pair<int, int>, int> used;
  int outputs = 0;
  for (int g = 0; g < n; ++g) {
    const Gate& x = gates[g];
    if (static_cast<int>(x.in.size()) != x.in_arity())
      throw Error(Errc::arity_violation, kind_name(x) + " '" + x.name + "' takes " +
                                             std::to_string(x.in_arity()) + " inputs");
    if (x.kind == GateKind::table && (x.table.size() != 4 || x.table.find_first_not_of("01") != std::string::npos))
      throw Error(Errc::invalid_argument, "bad truth table for '" + x.name + "'");
    if (x.kind == GateKind::output) ++outputs;
    for (const auto& s : x.in) {
      if (s.gate < 0 || s.gate >= n || s.pin < 0 || s.pin >= gates[s.gate].out_arity())
        throw Error(Errc::invalid_argument, "dangling wire into '" + x.name + "'");
      if (used[{s.gate, s.pin}]++)
        throw Error(Errc::arity_violation, "pin of '" + gates[s.gate].name + "' feeds two wires");
    }
  }
  if (outputs != 1 || output < 0 || output >= n || gates[output].kind != GateKind::output)
    throw Error(Errc::arity_violation, "a circuit has exactly one output");
  for (int i : inputs)
    if (i < 0 || i >= n || gates[i].kind != GateKind::input)
      throw Error(Errc::invalid_argument, "input list names a non-input gate");
  if (inputs.size() != count(GateKind::input))
    throw Error(Errc::invalid_argument, "input list incomplete");
  topo_order();
}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

struct Def {
  std::size_t line = 0;
  Gate gate;
  std::vector<std::string> args;
};

}  // namespace

Circuit parse_netlist(std::string_view text) {
  static const std::map<std::string, std::string> tables = {
      {"AND", "0001"}, {"OR", "0111"}, {"XOR", "0110"}, {"NAND", "1110"}, {"NOR", "1000"}, {"NXOR", "1001"}};
  std::vector<Def> defs;
  std::map<std::string, int> by_name;
  std::string out_name;
  std::size_t out_line = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t no = 0;
  auto define = [&](Def d) {
    if (!valid_name(d.gate.name)) parse_fail(d.line, "bad signal name '" + d.gate.name + "'");
    if (by_name.count(d.gate.name)) parse_fail(d.line, "'" + d.gate.name + "' defined twice");
    by_name[d.gate.name] = static_cast<int>(defs.size());
    defs.push_back(std::move(d));
  };
  while (std::getline(in, raw)) {
    ++no;
    auto w = split_words(raw);
    if (w.empty()) continue;
    Def d;
    d.line = no;
    const bool assign = std::any_of(w.begin(), w.end(), [](const std::string& x) {
      return x.find('=') != std::string::npos;
    });  // `out = NAND(a, a)` is an assignment
    if (w[0] == "in" && !assign) {
      if (w.size() != 2) parse_fail(no, "expected 'in <name>'");
      d.gate.kind = GateKind::input;
      d.gate.name = w[1];
      define(std::move(d));
    } else if (w[0] == "const" && !assign) {
      if (w.size() != 3 || (w[2] != "0" && w[2] != "1")) parse_fail(no, "expected 'const <name> <0|1>'");
      d.gate.kind = w[2] == "1" ? GateKind::const1 : GateKind::const0;
      d.gate.name = w[1];
      define(std::move(d));
    } else if (w[0] == "out" && !assign) {
      if (w.size() != 2) parse_fail(no, "expected 'out <name>'");
      if (!out_name.empty()) parse_fail(no, "more than one output");
      out_name = w[1];
      out_line = no;
    } else {
      std::string s;
      for (const auto& x : w) s += x;
      auto eq = s.find('=');
      auto lp = s.find('(');
      if (eq == std::string::npos || lp == std::string::npos || lp < eq || s.back() != ')')
        parse_fail(no, "expected '<name> = <OP>(<args>)'");
      d.gate.name = s.substr(0, eq);
      std::string op = s.substr(eq + 1, lp - eq - 1);
      std::string args = s.substr(lp + 1, s.size() - lp - 2);
      std::size_t want = 2;
      if (op == "NOT" || op == "ID") {
        d.gate.kind = op == "NOT" ? GateKind::not_ : GateKind::id;
        want = 1;
      } else if (tables.count(op)) {
        d.gate.kind = GateKind::table;
        d.gate.table = tables.at(op);
      } else if (op.size() == 6 && op.rfind("TT", 0) == 0 && op.find_first_not_of("01", 2) == std::string::npos) {
        d.gate.kind = GateKind::table;
        d.gate.table = op.substr(2);
      } else {
        parse_fail(no, "unknown operator '" + op + "'");
      }
      std::stringstream as(args);
      std::string a;
      while (std::getline(as, a, ',')) d.args.push_back(a);
      if (!args.empty() && args.back() == ',') d.args.push_back("");
      for (const auto& x : d.args)
        if (!valid_name(x)) parse_fail(no, "bad argument '" + x + "'");
      if (d.args.size() != want)
        throw Error(Errc::arity_violation, "line " + std::to_string(no) + ": " + op + " takes " +
                                               std::to_string(want) + " argument" + (want > 1 ? "s" : ""));
      define(std::move(d));
    }
  }
  if (out_name.empty()) throw Error(Errc::parse_error, "no 'out' line");

  // Uses of every signal, in order of appearance; the output comes last.
  std::map<std::string, std::vector<std::pair<int, int>>> uses;  // -> (def, arg)
  for (int i = 0; i < static_cast<int>(defs.size()); ++i)
    for (int k = 0; k < static_cast<int>(defs[i].args.size()); ++k) {
      const auto& a = defs[i].args[k];
      if (!by_name.count(a))
        throw Error(Errc::undefined_signal, "line " + std::to_string(defs[i].line) + ": '" + a + "'");
      uses[a].push_back({i, k});
    }
  if (!by_name.count(out_name))
    throw Error(Errc::undefined_signal, "line " + std::to_string(out_line) + ": '" + out_name + "'");

  Circuit c;
  for (auto& d : defs) {
    d.gate.in.assign(d.args.size(), Source{});
    int id = c.add(d.gate);
    if (d.gate.kind == GateKind::input) c.inputs.push_back(id);
  }
  Gate og;
  og.kind = GateKind::output;
  og.name = "out";
  og.in = {Source{}};
  c.output = c.add(og);
  uses[out_name].push_back({-1, 0});

  for (const auto& [name, list] : uses) {
    Source src{by_name.at(name), 0};
    for (std::size_t j = 0; j < list.size(); ++j) {
      Source feed = src;
      if (j + 1 < list.size()) {
        Gate f;
        f.kind = GateKind::fanout;
        f.name = name + "." + std::to_string(j);
        f.in = {src};
        int fid = c.add(f);
        feed = {fid, 0};
        src = {fid, 1};
      }
      auto [def, arg] = list[j];
      c.gates[def < 0 ? c.output : def].in[arg] = feed;
    }
  }
  c.validate();
  return c;
}

int evaluate(const Circuit& c, const std::vector<int>& input) {
  if (input.size() != c.inputs.size())
    throw Error(Errc::length_mismatch, "circuit has " + std::to_string(c.inputs.size()) + " inputs, got " +
                                           std::to_string(input.size()));
  std::vector<std::array<int, 2>> val(c.gates.size(), {0, 0});
  for (std::size_t i = 0; i < c.inputs.size(); ++i) val[c.inputs[i]][0] = input[i] & 1;
  for (int g : c.topo_order()) {
    const Gate& x = c.gates[g];
    auto arg = [&](int k) { return val[x.in[k].gate][x.in[k].pin]; };
    auto& v = val[g];
    switch (x.kind) {
      case GateKind::input: break;
      case GateKind::const0: v[0] = 0; break;
      case GateKind::const1: v[0] = 1; break;
      case GateKind::not_: v[0] = !arg(0); break;
      case GateKind::output:
      case GateKind::id: v[0] = arg(0); break;
      case GateKind::fanout: v = {arg(0), arg(0)}; break;
      case GateKind::crossover: v = {arg(1), arg(0)}; break;
      case GateKind::table: v[0] = x.table[2 * arg(0) + arg(1)] - '0'; break;
    }
  }
  return val[c.output][0];
}

void LayeredPlan::check() const {
  auto fail = [](const std::string& w) { throw Error(Errc::invalid_argument, "layered plan: " + w); };
  if (layers.empty()) fail("no layers");
  std::map<std::pair<int, int>, bool> consumed;
  for (const auto& g : circuit.gates)
    for (const auto& s : g.in) consumed[{s.gate, s.pin}] = true;
  for (int g : layers.front())
    if (!circuit.gates[g].in.empty()) fail("layer 0 holds a gate with inputs");
  if (layers.back() != std::vector<int>{circuit.output}) fail("the output is not alone in the last layer");
  for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
    std::vector<Source> outs, ins;
    for (int g : layers[i])
      for (int p = 0; p < circuit.gates[g].out_arity(); ++p)
        if (consumed.count({g, p})) outs.push_back({g, p});
    for (int g : layers[i + 1])
      for (const auto& s : circuit.gates[g].in) ins.push_back(s);
    if (outs != ins) fail("wires between layers " + std::to_string(i) + " and " + std::to_string(i + 1) + " cross");
  }
}

namespace {

struct Signal {
  Source src;     // in the plan circuit
  Source target;  // consuming (source-circuit gate, input index)
};

}  // namespace

PlanarCircuit planarize(const Circuit& src) {
  src.validate();
  Circuit c = src;
  const int n = static_cast<int>(c.gates.size());

  // Keep what the output depends on; a FANOUT left with one live branch becomes a wire.
  std::vector<char> live(n, 0);
  auto mark = [&] {
    std::fill(live.begin(), live.end(), 0);
    std::vector<int> st{c.output};
    live[c.output] = 1;
    while (!st.empty()) {
      int g = st.back();
      st.pop_back();
      for (const auto& s : c.gates[g].in)
        if (!live[s.gate]) {
          live[s.gate] = 1;
          st.push_back(s.gate);
        }
    }
  };
  for (bool changed = true; changed;) {
    changed = false;
    mark();
    std::map<std::pair<int, int>, std::pair<int, int>> consumer;
    for (int g = 0; g < n; ++g)
      if (live[g])
        for (int k = 0; k < static_cast<int>(c.gates[g].in.size()); ++k)
          consumer[{c.gates[g].in[k].gate, c.gates[g].in[k].pin}] = {g, k};
    for (int f = 0; f < n && !changed; ++f) {
      if (!live[f] || c.gates[f].kind != GateKind::fanout) continue;
      int branches = static_cast<int>(consumer.count({f, 0}) + consumer.count({f, 1}));
      if (branches != 1) continue;
      auto [g, k] = consumer.count({f, 0}) ? consumer.at({f, 0}) : consumer.at({f, 1});
      c.gates[g].in[k] = c.gates[f].in[0];
      c.gates[f].in.clear();
      c.gates[f].kind = GateKind::id;  // detached; dropped as dead below
      changed = true;
    }
  }
  mark();
  for (int i : c.inputs) live[i] = 1;

  std::vector<int> depth(n, 0);
  for (int g : c.topo_order())
    if (live[g])
      for (const auto& s : c.gates[g].in) depth[g] = std::max(depth[g], depth[s.gate] + 1);

  std::map<std::pair<int, int>, Source> consumer;  // source pin -> (gate, input index)
  for (int g = 0; g < n; ++g)
    if (live[g])
      for (int k = 0; k < static_cast<int>(c.gates[g].in.size()); ++k)
        consumer[{c.gates[g].in[k].gate, c.gates[g].in[k].pin}] = {g, k};

  PlanarCircuit out;
  LayeredPlan& plan = out.plan;
  Circuit& P = plan.circuit;

  std::vector<Signal> sigs;
  auto emit = [&](int orig, int pid) {
    for (int p = 0; p < c.gates[orig].out_arity(); ++p) {
      auto it = consumer.find({orig, p});
      if (it != consumer.end()) sigs.push_back({{pid, p}, it->second});
    }
  };
  auto make = [&](GateKind k, std::vector<Source> in, std::string name) {
    Gate g;
    g.kind = k;
    g.in = std::move(in);
    g.name = std::move(name);
    return P.add(std::move(g));
  };

  // Layer 0: inputs in order, then constants.
  {
    std::vector<int> layer0;
    std::vector<int> order = c.inputs;
    for (int g = 0; g < n; ++g)
      if (live[g] && (c.gates[g].kind == GateKind::const0 || c.gates[g].kind == GateKind::const1))
        order.push_back(g);
    for (int g : order) {
      Gate copy = c.gates[g];
      int pid = P.add(copy);
      if (copy.kind == GateKind::input) P.inputs.push_back(pid);
      layer0.push_back(pid);
      emit(g, pid);
    }
    plan.layers.push_back(layer0);
  }

  const int D = depth[c.output];
  for (int i = 1; i <= D; ++i) {
    struct Node {
      int orig = -1;  // source-circuit gate, or -1 for a pass-through ID
      Source carry;   // ID only: the consumer it forwards to
      std::vector<int> pos;
      double bary = 0;
      int hi = 0;
    };
    std::vector<Node> nodes;
    std::map<int, int> node_of;
    for (int p = 0; p < static_cast<int>(sigs.size()); ++p) {
      const Signal& s = sigs[p];
      int g = s.target.gate;
      if (depth[g] == i) {
        auto it = node_of.find(g);
        if (it == node_of.end()) {
          it = node_of.emplace(g, static_cast<int>(nodes.size())).first;
          Node nd;
          nd.orig = g;
          nd.pos.assign(c.gates[g].in.size(), -1);
          nodes.push_back(nd);
        }
        nodes[it->second].pos[s.target.pin] = p;
      } else {
        Node nd;
        nd.carry = s.target;
        nd.pos = {p};
        nodes.push_back(nd);
      }
    }
    for (auto& nd : nodes) {
      if (nd.orig >= 0 && c.gates[nd.orig].kind == GateKind::table && nd.pos[0] > nd.pos[1]) {
        // Read the operands the other way round instead of crossing them.
        std::swap(nd.pos[0], nd.pos[1]);
        auto& t = c.gates[nd.orig].table;
        std::swap(t[1], t[2]);
        for (auto& [pin, cons] : consumer)
          if (cons.gate == nd.orig) cons.pin = 1 - cons.pin;
      }
      double sum = 0;
      for (int p : nd.pos) sum += p;
      nd.bary = sum / static_cast<double>(nd.pos.size());
      nd.hi = *std::max_element(nd.pos.begin(), nd.pos.end());
    }
    std::stable_sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
      if (a.bary != b.bary) return a.bary < b.bary;
      return a.hi < b.hi;
    });

    // rank[p]: where the signal now at position p must end up.
    std::vector<int> rank(sigs.size());
    {
      int q = 0;
      for (const auto& nd : nodes)
        for (int p : nd.pos) rank[p] = q++;
    }
    // Odd-even transposition sort; each round with a swap becomes a sublayer.
    for (int parity = 0; !std::is_sorted(rank.begin(), rank.end()); parity ^= 1) {
      std::vector<std::size_t> swaps;
      for (std::size_t j = parity; j + 1 < rank.size(); j += 2)
        if (rank[j] > rank[j + 1]) swaps.push_back(j);
      if (swaps.empty()) continue;
      std::vector<int> sub;
      std::vector<Signal> next(sigs.size());
      std::size_t si = 0;
      for (std::size_t j = 0; j < sigs.size();) {
        if (si < swaps.size() && swaps[si] == j) {
          int x = make(GateKind::crossover, {sigs[j].src, sigs[j + 1].src}, "x" + std::to_string(P.gates.size()));
          next[j] = {{x, 0}, sigs[j + 1].target};
          next[j + 1] = {{x, 1}, sigs[j].target};
          std::swap(rank[j], rank[j + 1]);
          sub.push_back(x);
          ++si;
          j += 2;
        } else {
          int id = make(GateKind::id, {sigs[j].src}, "w" + std::to_string(P.gates.size()));
          next[j] = {{id, 0}, sigs[j].target};
          sub.push_back(id);
          ++j;
        }
      }
      sigs = std::move(next);
      plan.layers.push_back(sub);
    }

    // The layer proper: inputs are now consecutive and in order.
    std::vector<int> lay;
    std::vector<Signal> next;
    int q = 0;
    for (const auto& nd : nodes) {
      std::vector<Source> in;
      for (std::size_t k = 0; k < nd.pos.size(); ++k) in.push_back(sigs[q++].src);
      if (nd.orig < 0) {
        int id = make(GateKind::id, in, "w" + std::to_string(P.gates.size()));
        next.push_back({{id, 0}, nd.carry});
        lay.push_back(id);
        continue;
      }
      Gate g = c.gates[nd.orig];
      g.in = in;
      int pid = P.add(g);
      if (g.kind == GateKind::output) P.output = pid;
      lay.push_back(pid);
      for (int p = 0; p < g.out_arity(); ++p) {
        auto it = consumer.find({nd.orig, p});
        if (it != consumer.end()) next.push_back({{pid, p}, it->second});
      }
    }
    sigs = std::move(next);
    plan.layers.push_back(lay);
  }
  out.crossovers = static_cast<int>(P.count(GateKind::crossover));
  plan.check();

  // The planar circuit proper: the plan without its pass-through IDs.
  Circuit& pc = out.circuit;
  std::vector<int> remap(P.gates.size(), -1);
  for (int g : P.topo_order()) {
    if (P.gates[g].kind == GateKind::id) continue;
    Gate x = P.gates[g];
    for (auto& s : x.in) {
      while (P.gates[s.gate].kind == GateKind::id) s = P.gates[s.gate].in[0];
      s.gate = remap[s.gate];
    }
    remap[g] = pc.add(x);
  }
  for (int i : P.inputs) pc.inputs.push_back(remap[i]);
  pc.output = remap[P.output];
  pc.validate();
  return out;
}

const LayeredPlan& layer(const PlanarCircuit& p) {
  p.plan.check();
  return p.plan;
}

std::string random_netlist(std::mt19937_64& rng, int inputs, int gates) {
  static const char* ops[] = {"NOT", "AND", "OR", "XOR", "NAND", "NOR", "NXOR", "TT"};
  std::ostringstream out;
  std::vector<std::string> names;
  for (int i = 0; i < inputs; ++i) {
    names.push_back("i" + std::to_string(i));
    out << "in " << names.back() << "\n";
  }
  if (inputs == 0 || std::uniform_int_distribution<int>(0, 5)(rng) == 0) {
    names.push_back("k");
    out << "const k " << std::uniform_int_distribution<int>(0, 1)(rng) << "\n";
  }
  auto pick = [&] {
    // Half the time one of the last three signals, so circuits get deep.
    int m = static_cast<int>(names.size());
    int lo = std::uniform_int_distribution<int>(0, 1)(rng) ? std::max(0, m - 3) : 0;
    return names[std::uniform_int_distribution<int>(lo, m - 1)(rng)];
  };
  for (int g = 0; g < gates; ++g) {
    std::string op = ops[std::uniform_int_distribution<int>(0, 7)(rng)];
    std::string name = "g" + std::to_string(g);
    out << name << " = ";
    if (op == "NOT") {
      out << "NOT(" << pick() << ")\n";
    } else {
      if (op == "TT") {
        for (int b = 0; b < 4; ++b) op += char('0' + std::uniform_int_distribution<int>(0, 1)(rng));
      }
      out << op << "(" << pick() << ", " << pick() << ")\n";
    }
    names.push_back(name);
  }
  out << "out " << names.back() << "\n";
  return out.str();
}

}  // namespace mawatam
