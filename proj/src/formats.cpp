#include "mawatam/formats.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mawatam/error.hpp"

namespace mawatam {

std::vector<std::string> split_words(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

void parse_fail(std::size_t line, const std::string& what) {
  throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view text, std::size_t line) {
  int v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size())
    parse_fail(line, "expected an integer, got '" + std::string(text) + "'");
  return v;
}

namespace {

// Iterates non-empty lines, checking the header on the first one.
template <typename Fn>
void for_each_line(std::string_view text, std::string_view header, Fn&& fn) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++no;
    auto w = split_words(line);
    if (w.empty()) continue;
    if (!seen_header) {
      if (w.size() != 2 || (w[0] + " " + w[1]) != header)
        parse_fail(no, "expected header '" + std::string(header) + "'");
      seen_header = true;
      continue;
    }
    fn(w, no);
  }
  if (!seen_header) parse_fail(no, "missing header '" + std::string(header) + "'");
}

Side need_side(const std::string& s, std::size_t line) {
  auto side = parse_side(s);
  if (!side) parse_fail(line, "bad side '" + s + "'");
  return *side;
}

}  // namespace

TileSet load_tileset(std::string_view text, std::string name) {
  std::vector<TileType> tiles;
  for_each_line(text, "mawatam-tileset v1", [&](const std::vector<std::string>& w, std::size_t no) {
    if (w[0] == "name" && w.size() == 2) {
      name = w[1];
      return;
    }
    if (w[0] != "tile" || w.size() != 6) parse_fail(no, "expected 'tile <name> N= E= S= W='");
    TileType t;
    t.name = w[1];
    const char* keys[4] = {"N=", "E=", "S=", "W="};
    for (int k = 0; k < 4; ++k) {
      if (w[2 + k].rfind(keys[k], 0) != 0) parse_fail(no, std::string("expected ") + keys[k]);
      t.glues[k] = GlueLabel(w[2 + k].substr(2));
    }
    tiles.push_back(std::move(t));
  });
  return TileSet(std::move(name), std::move(tiles));
}

std::string save_tileset(const TileSet& ts) {
  std::ostringstream out;
  out << "mawatam-tileset v1\n";
  out << "name " << ts.name() << "\n";
  for (const auto& t : ts.tiles())
    out << "tile " << t.name << " N=" << t.glue(Side::N).str() << " E=" << t.glue(Side::E).str()
        << " S=" << t.glue(Side::S).str() << " W=" << t.glue(Side::W).str() << "\n";
  return out.str();
}

Maze load_maze(std::string_view text) {
  Maze m;
  for_each_line(text, "mawatam-maze v1", [&](const std::vector<std::string>& w, std::size_t no) {
    if (w[0] == "cell" && w.size() == 3) {
      m.add_cell({parse_int(w[1], no), parse_int(w[2], no)});
    } else if (w[0] == "glue" && w.size() == 5) {
      m.set_glue({parse_int(w[1], no), parse_int(w[2], no)}, need_side(w[3], no), GlueLabel(w[4]));
    } else if (w[0] == "input" && w.size() == 3) {
      m.add_input_site({parse_int(w[1], no), parse_int(w[2], no)});
    } else if (w[0] == "output" && w.size() == 4) {
      m.set_output_edge(EdgeSite({parse_int(w[1], no), parse_int(w[2], no)}, need_side(w[3], no)));
    } else {
      parse_fail(no, "unknown maze directive '" + w[0] + "'");
    }
  });
  m.validate();
  return m;
}

std::string save_maze(const Maze& m) {
  std::ostringstream out;
  out << "mawatam-maze v1\n";
  for (auto c : m.cells()) out << "cell " << c.x << " " << c.y << "\n";
  for (const auto& [k, g] : m.glues())
    out << "glue " << k.cell.x << " " << k.cell.y << " " << side_char(k.side) << " " << g.str() << "\n";
  for (auto c : m.input_sites()) out << "input " << c.x << " " << c.y << "\n";
  if (auto e = m.output_edge())
    out << "output " << e->cell().x << " " << e->cell().y << " " << side_char(e->side()) << "\n";
  return out.str();
}

std::string dump_assembly(const Assembly& a) {
  std::ostringstream out;
  out << "mawatam-assembly v1\n";
  for (const auto& p : a.trace()) out << "tile " << p.pos.x << " " << p.pos.y << " " << a.tile_of(p).name << "\n";
  for (const auto& [k, g] : a.maze().glues())
    out << "glue " << k.cell.x << " " << k.cell.y << " " << side_char(k.side) << " " << g.str() << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::file_not_found, path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path);
  out << content;
}

}  // namespace mawatam
