#include "mawatam/render.hpp"

#include <sstream>

#include "mawatam/error.hpp"

namespace mawatam {

namespace {

Bounds extent(const Assembly& a) {
  Bounds b;
  for (auto c : a.maze().cells()) b.include(c);
  for (auto c : a.maze().input_sites()) b.include(c);
  for (const auto& p : a.trace()) b.include(p.pos);
  return b;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string ascii(const Assembly& a, const Bounds& b) {
  std::string out;
  if (b.empty()) return out;
  for (int y = b.max_y; y >= b.min_y; --y) {
    for (int x = b.min_x; x <= b.max_x; ++x) {
      Coord c{x, y};
      if (a.maze().has_cell(c)) out += '#';
      else if (const TileType* t = a.tile_at(c)) out += t->name.empty() ? '?' : t->name[0];
      else out += '.';
    }
    out += '\n';
  }
  return out;
}

std::string svg(const Assembly& a, const Bounds& b, const RenderOptions& opt) {
  if (opt.cell_size < 4) throw Error(Errc::invalid_argument, "svg cell size must be at least 4");
  const int s = opt.cell_size;
  const int W = b.width() * s, H = b.height() * s;
  // Cell (x, y) has its top-left pixel at px(x), py(y).
  auto px = [&](int x) { return (x - b.min_x) * s; };
  auto py = [&](int y) { return (b.max_y - y) * s; };
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 "
    << W << ' ' << H << "\">\n"
    << "<style>.seed{fill:#555}.tile{fill:#cde;stroke:#345;stroke-width:1}.hl{stroke:#d22;stroke-width:2}"
       "text{font-family:monospace;text-anchor:middle;dominant-baseline:central}</style>\n"
    << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"#fff\"/>\n";
  auto box = [&](Coord c, const char* cls) {
    o << "<rect class=\"" << cls << (opt.highlight.count(c) ? " hl" : "") << "\" x=\"" << px(c.x) << "\" y=\""
      << py(c.y) << "\" width=\"" << s << "\" height=\"" << s << "\"/>\n";
  };
  for (auto c : a.maze().cells()) box(c, "seed");
  for (const auto& p : a.trace()) {
    box(p.pos, "tile");
    o << "<text x=\"" << px(p.pos.x) + s / 2 << "\" y=\"" << py(p.pos.y) + s / 2 << "\" font-size=\"" << s / 3
      << "\">" << escape(a.tile_of(p).name) << "</text>\n";
  }
  if (opt.show_glues) {
    // Label just inside the edge of the cell that carries the glue.
    auto label = [&](Coord c, Side side, const GlueLabel& g) {
      if (g.is_null()) return;
      double x = px(c.x) + s / 2.0, y = py(c.y) + s / 2.0, d = s * 0.36;
      switch (side) {
        case Side::N: y -= d; break;
        case Side::S: y += d; break;
        case Side::E: x += d; break;
        case Side::W: x -= d; break;
      }
      o << "<text class=\"glue\" x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << s / 4 << "\">"
        << escape(g.str()) << "</text>\n";
    };
    for (const auto& [k, g] : a.maze().glues()) label(k.cell, k.side, g);
    for (const auto& p : a.trace())
      for (Side side : kSides) label(p.pos, side, a.tile_of(p).glue(side));
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace

std::string render(const Assembly& a, const RenderOptions& opt) {
  const Bounds b = extent(a);
  return opt.format == RenderFormat::svg ? svg(a, b, opt) : ascii(a, b);
}

}  // namespace mawatam
