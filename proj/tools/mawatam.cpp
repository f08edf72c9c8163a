#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mawatam/arithmetic.hpp"
#include "mawatam/engine.hpp"
#include "mawatam/error.hpp"
#include "mawatam/formats.hpp"
#include "mawatam/gadget.hpp"
#include "mawatam/layout.hpp"
#include "mawatam/render.hpp"
#include "mawatam/search.hpp"
#include "mawatam/tilesets.hpp"

using namespace mawatam;

namespace {

struct Common {
  std::string tileset = "nand-nxor";
  std::string order = "raster";
  std::uint64_t seed = 0;
  bool strict = false;
  std::size_t max_steps = 1'000'000;
  std::string svg;

  RunOptions options() const {
    RunOptions o;
    o.order = order == "random" ? OrderPolicy::random : OrderPolicy::raster;
    o.rng_seed = seed;
    o.mode = strict ? MatchMode::strict : MatchMode::permissive;
    o.max_steps = max_steps;
    return o;
  }
  TileSet tiles() const {
    if (tileset.rfind("file:", 0) == 0) return load_tileset(read_file(tileset.substr(5)), tileset.substr(5));
    return tileset_by_id(tileset);
  }
  // Compilation and input tiles need one of the built-in sets.
  std::string builtin() const {
    if (tileset.rfind("file:", 0) == 0)
      throw Error(Errc::invalid_argument, "this command needs a built-in tile set, not " + tileset);
    return tileset == "collatz-ext" ? "collatz" : tileset;
  }
};

void add_common(CLI::App* app, Common& c, bool with_tileset = true) {
  if (with_tileset)
    app->add_option("--tileset", c.tileset, "nand-nxor | collatz | collatz-ext | file:PATH")->capture_default_str();
  app->add_option("--order", c.order, "attachment order")
      ->check(CLI::IsMember({"raster", "random"}))
      ->capture_default_str();
  app->add_option("--rng-seed", c.seed, "seed for --order random")->capture_default_str();
  app->add_flag("--strict", c.strict, "refuse attachments with mismatched glues");
  app->add_option("--max-steps", c.max_steps, "attachment budget")->capture_default_str();
  app->add_option("--svg", c.svg, "also write an SVG picture of the result");
}

std::vector<int> parse_bits(const std::string& s) {
  std::vector<int> bits;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw Error(Errc::invalid_argument, "input '" + s + "' is not a bit string");
    bits.push_back(ch - '0');
  }
  return bits;
}

std::string bit_string(unsigned v, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += char('0' + ((v >> (n - 1 - i)) & 1));
  return s;
}

void maybe_svg(const Common& c, const Assembly& a, bool glues = false) {
  if (c.svg.empty()) return;
  RenderOptions r;
  r.format = RenderFormat::svg;
  r.show_glues = glues;
  write_file(c.svg, render(a, r));
}

void print_report(const RunReport& r) {
  std::cout << "steps " << r.steps << "\n";
  std::cout << "nondeterministic " << (r.nondeterministic ? "yes" : "no") << "\n";
  std::cout << "mismatches " << r.mismatches << "\n";
}

RunResult grow(const Maze& m, const TileSet& ts, const RunOptions& opt) {
  return run_to_terminal(Assembly(std::make_shared<const Maze>(m)), ts, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maze-walking tile assembly toolchain"};
  app.require_subcommand(1);

  Common common;

  auto* simulate = app.add_subcommand("simulate", "grow a maze file to its terminal assembly");
  std::string maze_path, input, dump_path;
  simulate->add_option("--maze", maze_path, "maze file")->required();
  simulate->add_option("--input", input, "bits for the maze's input sites");
  simulate->add_option("--dump", dump_path, "write the terminal assembly");
  add_common(simulate, common);

  auto* compile_cmd = app.add_subcommand("compile", "compile a netlist into a maze");
  std::string circuit_path, out_path;
  compile_cmd->add_option("--circuit", circuit_path, "netlist file")->required();
  compile_cmd->add_option("-o,--out", out_path, "write the maze file");
  add_common(compile_cmd, common);

  auto* run = app.add_subcommand("run", "compile a netlist and run it on inputs");
  run->add_option("--circuit", circuit_path, "netlist file")->required();
  run->add_option("--input", input, "input bits; every input when omitted");
  add_common(run, common);

  auto* collatz_cmd = app.add_subcommand("collatz", "iterate the Collatz map by growth");
  std::string x_text;
  std::size_t steps = 0;
  collatz_cmd->add_option("--x", x_text, "starting value")->required();
  collatz_cmd->add_option("--steps", steps, "number of steps")->required();
  add_common(collatz_cmd, common, false);

  auto* powers = app.add_subcommand("powers2", "powers of two in base 3");
  int m = 8;
  powers->add_option("--m", m, "number of columns")->check(CLI::Range(1, 100000))->capture_default_str();
  add_common(powers, common, false);

  auto* erdos = app.add_subcommand("erdos", "exponents n with no ternary digit 2 in 2^n");
  unsigned n_max = 64;
  erdos->add_option("--n", n_max, "largest exponent")->capture_default_str();

  auto* gadget = app.add_subcommand("gadget", "gadget library tools");
  gadget->require_subcommand(1);
  auto* validate = gadget->add_subcommand("validate", "validate built-in gadgets or a gadget file");
  std::string gadget_name, gadget_file;
  validate->add_option("--name", gadget_name, "library gadget to check (default: all)");
  validate->add_option("--file", gadget_file, "gadget file to check");
  add_common(validate, common);
  auto* search = gadget->add_subcommand("search", "search rectangular gate seeds");
  std::string table;
  int max_w = 3, max_h = 3;
  bool native = false;
  search->add_option("--table", table, "truth table, e.g. 0001 for AND")->required();
  search->add_option("--max-w", max_w, "largest width")->capture_default_str();
  search->add_option("--max-h", max_h, "largest height")->capture_default_str();
  search->add_flag("--native", native, "inputs from north and east instead of both from the east");
  add_common(search, common);

  auto* render_cmd = app.add_subcommand("render", "draw a maze, optionally grown");
  bool grown = false, glues = false;
  render_cmd->add_option("--maze", maze_path, "maze file")->required();
  render_cmd->add_flag("--grow", grown, "grow to the terminal assembly first");
  render_cmd->add_option("--input", input, "bits for the maze's input sites (implies --grow)");
  render_cmd->add_flag("--show-glues", glues, "label glues in the SVG");
  add_common(render_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const RunOptions opt = common.options();

    if (*simulate) {
      Maze maze = load_maze(read_file(maze_path));
      if (!input.empty() || !maze.input_sites().empty())
        maze = place_inputs(maze, common.builtin(), parse_bits(input));
      auto res = grow(maze, common.tiles(), opt);
      std::cout << "tiles " << res.assembly.size() << "\n";
      print_report(res.report);
      if (auto e = maze.output_edge()) std::cout << "output " << glue_at(res.assembly, *e).str() << "\n";
      if (!dump_path.empty()) write_file(dump_path, dump_assembly(res.assembly));
      maybe_svg(common, res.assembly);
    } else if (*compile_cmd) {
      auto c = parse_netlist(read_file(circuit_path));
      auto cm = compile(c, common.builtin());
      const auto& acc = cm.accounting;
      std::cout << "inputs " << cm.input_sites().size() << "\n";
      std::cout << "gadgets " << cm.layout.placements.size() << "\n";
      std::cout << "crossovers " << acc.crossovers.size() << "\n";
      std::cout << "layers " << cm.planar.plan.depth() << "\n";
      std::cout << "tiles " << acc.total << " (gadgets " << acc.total - acc.wire_tiles << ", wires " << acc.wire_tiles
                << ")\n";
      std::cout << "max-gate-tiles " << acc.max_gate << "\n";
      const Bounds b = cm.maze().bounds();
      std::cout << "size " << b.width() << "x" << b.height() << "\n";
      if (!out_path.empty()) write_file(out_path, save_maze(cm.maze()));
      maybe_svg(common, Assembly(std::make_shared<const Maze>(cm.maze())));
    } else if (*run) {
      auto c = parse_netlist(read_file(circuit_path));
      auto cm = compile(c, common.builtin());
      MazeRunner runner(cm);
      if (!input.empty()) {
        auto bits = parse_bits(input);
        auto rep = runner.run(bits, opt);
        if (rep.nondeterministic) throw Error(Errc::nondeterminism, "compiled maze is not directed");
        std::cout << "output " << runner.output() << "\n";
        if (!common.svg.empty()) maybe_svg(common, grow(encode_input(cm, bits), tileset_by_id(cm.tileset_id), opt).assembly);
      } else {
        const std::size_t n = c.inputs.size();
        for (unsigned v = 0; v < (1u << n); ++v) {
          runner.run(parse_bits(bit_string(v, n)), opt);
          std::cout << (n ? bit_string(v, n) : "-") << " " << runner.output() << "\n";
        }
      }
    } else if (*collatz_cmd) {
      Natural x;
      if (x_text.empty() || x_text.find_first_not_of("0123456789") != std::string::npos || x.set_str(x_text, 10) != 0)
        throw Error(Errc::invalid_argument, "--x must be a non-negative integer");
      auto r = run_collatz(x, steps);
      std::cout << r.value.get_str() << " (ternary " << r.digits << ")\n";
      maybe_svg(common, r.assembly);
    } else if (*powers) {
      auto res = grow(powers2_seed(m), collatz(), opt);
      for (int k = 0; k < m; ++k) {
        std::string digits;
        Natural v = read_digits(res.assembly, powers2_column(m, k), &digits);
        auto nz = digits.find_first_not_of('0');
        std::cout << "2^" << k << " = " << v.get_str() << " (ternary "
                  << (nz == std::string::npos ? "0" : digits.substr(nz)) << ")\n";
      }
      maybe_svg(common, res.assembly);
    } else if (*erdos) {
      auto hits = erdos_scan(n_max);
      std::string sep;
      for (unsigned e : hits) {
        std::cout << sep << e;
        sep = " ";
      }
      std::cout << "\n";
    } else if (*validate) {
      const TileSet ts = common.tiles();
      std::vector<Gadget> todo;
      if (!gadget_file.empty()) {
        todo.push_back(load_gadget(read_file(gadget_file), gadget_file));
      } else {
        const auto& lib = builtin_library(common.builtin());
        if (!gadget_name.empty()) todo.push_back(lib.get(gadget_name));
        else
          for (const auto& [name, g] : lib.all()) todo.push_back(g);
      }
      for (const auto& g : todo) {
        auto rep = validate_gadget(g, ts, opt);
        std::cout << "ok " << g.name << " tiles " << rep.max_tiles << "\n";
      }
    } else if (*search) {
      SearchStats stats;
      auto g = search_gate_seed(common.tiles(), common.builtin(), table, max_w, max_h,
                                native ? GateConvention::native : GateConvention::east, &stats);
      std::cerr << "candidates " << stats.candidates << " runs " << stats.runs << " solutions " << stats.solutions
                << "\n";
      if (!g) throw Error(Errc::validation_failure, "no seed for table " + table + " within " +
                                                        std::to_string(max_w) + "x" + std::to_string(max_h));
      std::cout << save_gadget(*g);
    } else if (*render_cmd) {
      Maze maze = load_maze(read_file(maze_path));
      std::optional<Assembly> a;
      if (!input.empty()) {
        maze = place_inputs(maze, common.builtin(), parse_bits(input));
        grown = true;
      }
      if (grown) a = grow(maze, common.tiles(), opt).assembly;
      else a.emplace(std::make_shared<const Maze>(maze));
      RenderOptions r;
      if (common.svg.empty()) {
        std::cout << render(*a, r);
      } else {
        r.format = RenderFormat::svg;
        r.show_glues = glues;
        write_file(common.svg, render(*a, r));
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
