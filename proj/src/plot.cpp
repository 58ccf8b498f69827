#include "goodsg/plot.hpp"

#include <sstream>
#include <vector>

#include "goodsg/good_semigroup.hpp"

namespace goodsg {

namespace {

constexpr Coord kStep = 20;
constexpr Coord kMargin = 40;
constexpr Coord kExtra = 3;

void require_plane(SmallSet const& x, char const* op) {
  if (x.dim() != 2) {
    throw UnsupportedDimension(op, x.dim());
  }
}

struct Frame {
  Coord xmax;
  Coord ymax;

  Coord sx(Coord x) const { return kMargin + kStep * x; }
  Coord sy(Coord y) const { return kMargin + kStep * (ymax - y); }
};

}  // namespace

std::string render_svg(SmallSet const& x) {
  require_plane(x, "render_svg");
  Point const& c = x.top();
  Frame const f{c[0] + kExtra, c[1] + kExtra};
  Coord const width = 2 * kMargin + kStep * f.xmax;
  Coord const height = 2 * kMargin + kStep * f.ymax;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "  <defs>\n"
         "    <pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" "
         "width=\"6\" height=\"6\">\n"
         "      <path d=\"M0,6 L6,0\" stroke=\"#808080\" stroke-width=\"1\"/>\n"
         "    </pattern>\n"
         "  </defs>\n";
  out << "  <rect x=\"" << f.sx(c[0]) << "\" y=\"" << f.sy(f.ymax)
      << "\" width=\"" << kStep * (f.xmax - c[0]) << "\" height=\""
      << kStep * (f.ymax - c[1]) << "\" fill=\"url(#hatch)\"/>\n";
  out << "  <g stroke=\"#000000\" stroke-width=\"1\">\n"
      << "    <line x1=\"" << f.sx(0) << "\" y1=\"" << f.sy(0) << "\" x2=\""
      << f.sx(f.xmax) << "\" y2=\"" << f.sy(0) << "\"/>\n"
      << "    <line x1=\"" << f.sx(0) << "\" y1=\"" << f.sy(0) << "\" x2=\""
      << f.sx(0) << "\" y2=\"" << f.sy(f.ymax) << "\"/>\n"
      << "  </g>\n";

  out << "  <g stroke=\"#000000\" stroke-width=\"1\" "
         "stroke-dasharray=\"2,4\">\n";
  for (auto const& a : x.points()) {
    IndexSet const j = border_indices(a, c);
    if (j.contains(0)) {
      out << "    <line x1=\"" << f.sx(a[0]) << "\" y1=\"" << f.sy(a[1])
          << "\" x2=\"" << f.sx(f.xmax) << "\" y2=\"" << f.sy(a[1]) << "\"/>\n";
    }
    if (j.contains(1)) {
      out << "    <line x1=\"" << f.sx(a[0]) << "\" y1=\"" << f.sy(a[1])
          << "\" x2=\"" << f.sx(a[0]) << "\" y2=\"" << f.sy(f.ymax) << "\"/>\n";
    }
  }
  out << "  </g>\n";

  out << "  <g fill=\"#000000\">\n";
  for (auto const& a : x.points()) {
    out << "    <circle cx=\"" << f.sx(a[0]) << "\" cy=\"" << f.sy(a[1])
        << "\" r=\"4\"/>\n";
  }
  out << "  </g>\n";
  out << "  <text x=\"" << f.sx(c[0]) + 6 << "\" y=\"" << f.sy(c[1]) + 16
      << "\" font-family=\"monospace\" font-size=\"12\">C=" << c
      << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_ascii(SmallSet const& x) {
  require_plane(x, "render_ascii");
  Point const& c = x.top();
  Coord const xmax = c[0] + kExtra;
  Coord const ymax = c[1] + kExtra;
  auto const w = static_cast<std::size_t>(xmax + 1);
  std::vector<std::string> grid(static_cast<std::size_t>(ymax + 1),
                                std::string(w, '.'));
  auto cell = [&](Coord px, Coord py) -> char& {
    return grid[static_cast<std::size_t>(py)][static_cast<std::size_t>(px)];
  };
  auto mark = [&](Coord px, Coord py, char ch) {
    char& now = cell(px, py);
    if (now == '.') {
      now = ch;
    } else if (now != ch) {
      now = '+';
    }
  };
  for (auto const& a : x.points()) {
    IndexSet const j = border_indices(a, c);
    if (j.contains(0)) {
      for (Coord px = a[0] + 1; px <= xmax; ++px) {
        mark(px, a[1], '-');
      }
    }
    if (j.contains(1)) {
      for (Coord py = a[1] + 1; py <= ymax; ++py) {
        mark(a[0], py, '|');
      }
    }
  }
  for (Coord px = c[0]; px <= xmax; ++px) {
    for (Coord py = c[1]; py <= ymax; ++py) {
      cell(px, py) = '#';
    }
  }
  for (auto const& a : x.points()) {
    cell(a[0], a[1]) = 'o';
  }

  std::size_t const label = std::to_string(ymax).size();
  std::ostringstream out;
  for (Coord py = ymax; py >= 0; --py) {
    std::string num = std::to_string(py);
    out << std::string(label - num.size(), ' ') << num << ' '
        << grid[static_cast<std::size_t>(py)] << '\n';
  }
  out << std::string(label + 1, ' ');
  for (Coord px = 0; px <= xmax; ++px) {
    out << static_cast<char>('0' + px % 10);
  }
  out << "\n\n";
  out << "o small element   | - rays out of the border   + crossing rays\n"
      << "# conductor region C + N^2, C = " << c << '\n';
  return out.str();
}

}  // namespace goodsg
