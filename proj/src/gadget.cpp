#include "mawatam/gadget.hpp"

#include <sstream>

#include "mawatam/error.hpp"
#include "mawatam/formats.hpp"

namespace mawatam {

std::vector<Port> Gadget::inputs() const {
  std::vector<Port> v;
  for (const auto& p : ports)
    if (p.dir == PortDir::in) v.push_back(p);
  return v;
}

std::vector<Port> Gadget::outputs() const {
  std::vector<Port> v;
  for (const auto& p : ports)
    if (p.dir == PortDir::out) v.push_back(p);
  return v;
}

std::string save_gadget(const Gadget& g) {
  std::ostringstream out;
  out << "mawatam-gadget v1\n";
  out << "tileset " << g.tileset_id << "\n";
  for (auto c : g.fragment.cells()) out << "cell " << c.x << " " << c.y << "\n";
  for (const auto& [k, l] : g.fragment.glues())
    out << "glue " << k.cell.x << " " << k.cell.y << " " << side_char(k.side) << " " << l.str() << "\n";
  for (const auto& p : g.ports) {
    out << "port " << p.cell.x << " " << p.cell.y << " " << side_char(p.side) << " "
        << (p.dir == PortDir::in ? "in" : "out") << " " << (p.axis == Axis::h ? "h" : "v") << " "
        << (p.polarity == Polarity::plain ? "plain" : "neg") << " "
        << (p.parity == ParityClass::even ? "even" : p.parity == ParityClass::odd ? "odd" : "none") << "\n";
  }
  for (const auto& t : g.truth) out << "truth " << t << "\n";
  out << "tiles " << g.tiles << "\n";
  return out.str();
}

Gadget load_gadget(std::string_view text, std::string name) {
  Gadget g;
  g.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++no;
    auto w = split_words(line);
    if (w.empty()) continue;
    if (!header) {
      if (w.size() != 2 || w[0] != "mawatam-gadget" || w[1] != "v1")
        parse_fail(no, "expected header 'mawatam-gadget v1'");
      header = true;
      continue;
    }
    auto xy = [&](std::size_t i) { return Coord{parse_int(w[i], no), parse_int(w[i + 1], no)}; };
    auto side = [&](const std::string& s) {
      auto sd = parse_side(s);
      if (!sd) parse_fail(no, "bad side '" + s + "'");
      return *sd;
    };
    if (w[0] == "tileset" && w.size() == 2) {
      g.tileset_id = w[1];
    } else if (w[0] == "name" && w.size() == 2) {
      g.name = w[1];
    } else if (w[0] == "cell" && w.size() == 3) {
      g.fragment.add_cell(xy(1));
    } else if (w[0] == "glue" && w.size() == 5) {
      g.fragment.set_glue(xy(1), side(w[3]), GlueLabel(w[4]));
    } else if (w[0] == "port" && w.size() == 8) {
      Port p;
      p.cell = xy(1);
      p.side = side(w[3]);
      if (w[4] != "in" && w[4] != "out") parse_fail(no, "port direction must be in|out");
      p.dir = w[4] == "in" ? PortDir::in : PortDir::out;
      if (w[5] != "h" && w[5] != "v") parse_fail(no, "port axis must be h|v");
      p.axis = w[5] == "h" ? Axis::h : Axis::v;
      if (w[6] != "plain" && w[6] != "neg") parse_fail(no, "port polarity must be plain|neg");
      p.polarity = w[6] == "plain" ? Polarity::plain : Polarity::negated;
      if (w[7] == "even") p.parity = ParityClass::even;
      else if (w[7] == "odd") p.parity = ParityClass::odd;
      else if (w[7] == "none") p.parity = ParityClass::none;
      else parse_fail(no, "port parity must be even|odd|none");
      g.ports.push_back(p);
    } else if (w[0] == "truth" && w.size() == 2) {
      if (w[1].find_first_not_of("01") != std::string::npos) parse_fail(no, "truth table must be bits");
      g.truth.push_back(w[1]);
    } else if (w[0] == "tiles" && w.size() == 2) {
      g.tiles = parse_int(w[1], no);
    } else {
      parse_fail(no, "unknown gadget directive '" + w[0] + "'");
    }
  }
  if (!header) parse_fail(no, "missing header");
  const std::size_t k = g.inputs().size();
  if (g.truth.size() != g.outputs().size())
    throw Error(Errc::parse_error, "one truth table per out-port expected");
  for (const auto& t : g.truth)
    if (t.size() != (std::size_t{1} << k))
      throw Error(Errc::parse_error, "truth table length must be 2^inputs");
  return g;
}

Gadget instantiate(const Gadget& g, Coord offset) {
  Gadget out = g;
  out.fragment = Maze();
  out.fragment.merge(g.fragment, offset);
  for (auto& p : out.ports) p.cell = p.cell + offset;
  return out;
}

void compose(Maze& into, const Maze& fragment) {
  for (auto c : fragment.cells())
    if (into.has_cell(c))
      throw Error(Errc::overlap, "cell (" + std::to_string(c.x) + "," + std::to_string(c.y) + ")");
  into.merge(fragment);
}

Maze gadget_harness(const Gadget& g, const std::vector<int>& inputs) {
  Maze m = g.fragment;
  auto ins = g.inputs();
  for (std::size_t i = 0; i < ins.size(); ++i) {
    const Port& p = ins[i];
    Coord d = p.outside();
    if (m.has_cell(d)) continue;
    m.add_cell(d);
    if (m.has_cell(p.cell)) continue;  // port absorbed by a seed cell
    int bit = inputs[i] ^ (p.polarity == Polarity::negated ? 1 : 0);
    m.set_glue(d, opposite(p.side), std::to_string(bit));
  }
  return m;
}

ValidationReport check_gadget(const Gadget& g, const TileSet& ts, const RunOptions& opt) {
  ValidationReport rep;
  const auto ins = g.inputs();
  const auto outs = g.outputs();
  const std::size_t k = ins.size();
  auto fail = [&](const std::string& what, const std::vector<int>& bits) {
    if (!rep.ok) return;
    std::string a;
    for (int b : bits) a += char('0' + b);
    rep.ok = false;
    rep.failure = g.name + " input " + (a.empty() ? "()" : a) + ": " + what;
  };
  if (g.truth.size() != outs.size()) {
    fail("truth tables do not match out-ports", {});
    return rep;
  }
  for (std::size_t idx = 0; idx < (std::size_t{1} << k); ++idx) {
    std::vector<int> bits(k);
    for (std::size_t i = 0; i < k; ++i) bits[i] = (idx >> (k - 1 - i)) & 1;
    GadgetCase cs;
    cs.inputs = bits;
    Maze m = gadget_harness(g, bits);
    Engine eng(m, ts);
    RunReport r;
    try {
      r = eng.run(opt);
    } catch (const Error& e) {
      fail(e.what(), bits);
      return rep;
    }
    cs.tiles = r.steps;
    cs.mismatches = r.mismatches;
    for (const auto& [c, t] : eng.trace()) cs.trace.emplace_back(c, ts.tiles()[t].name);
    if (r.nondeterministic) {
      auto c = *r.first_nondeterminism;
      fail("nondeterministic at (" + std::to_string(c.x) + "," + std::to_string(c.y) + ")", bits);
    }
    for (std::size_t o = 0; o < outs.size(); ++o) {
      std::string got = eng.glue_at(outs[o].edge());
      int want = (g.truth[o][idx] - '0') ^ (outs[o].polarity == Polarity::negated ? 1 : 0);
      cs.outputs.push_back(got);
      if (got != std::to_string(want)) {
        fail("out-port " + std::to_string(o) + " at (" + std::to_string(outs[o].cell.x) + "," +
                 std::to_string(outs[o].cell.y) + "," + side_char(outs[o].side) + ") reads '" + got +
                 "', expected " + std::to_string(want),
             bits);
      }
    }
    if (cs.tiles > static_cast<std::size_t>(g.tiles))
      fail(std::to_string(cs.tiles) + " tiles exceed the declared " + std::to_string(g.tiles), bits);
    rep.max_tiles = std::max(rep.max_tiles, cs.tiles);
    rep.min_tiles = idx == 0 ? cs.tiles : std::min(rep.min_tiles, cs.tiles);
    rep.cases.push_back(std::move(cs));
    if (!rep.ok) return rep;
  }
  return rep;
}

ValidationReport validate_gadget(const Gadget& g, const TileSet& ts, const RunOptions& opt) {
  auto rep = check_gadget(g, ts, opt);
  if (!rep.ok) throw Error(Errc::validation_failure, rep.failure);
  return rep;
}

void GadgetLibrary::add(Gadget g) {
  auto key = g.name;
  gadgets_[key] = std::move(g);
}

const Gadget& GadgetLibrary::get(const std::string& role) const {
  auto it = gadgets_.find(role);
  if (it == gadgets_.end())
    throw Error(Errc::invalid_argument, "no gadget '" + role + "' for " + tileset_id_);
  return it->second;
}

std::string gate_name(const std::string& table) {
  static const std::map<std::string, std::string> names = {
      {"0001", "AND"}, {"0111", "OR"}, {"0110", "XOR"}, {"1110", "NAND"}, {"1000", "NOR"}, {"1001", "NXOR"}};
  auto it = names.find(table);
  return it == names.end() ? "TT" + table : it->second;
}

}  // namespace mawatam
