#include "goeritz/render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace goeritz {

namespace {

struct Point {
  double x, y;
};

constexpr double kRadius = 150;
constexpr double kCell = 360;
constexpr double kTop = 40;

Point centre(Hexagon h) {
  int id = hexagon_id(h);
  return {kCell * (id % 2) + kCell / 2, kTop + kCell * (id / 2) + kCell / 2};
}

// Vertex k sits at angle 60k - 30 degrees; side i runs from vertex i to i+1.
Point vertex(Hexagon h, int k, double r = kRadius) {
  double t = (60.0 * k - 30.0) * std::numbers::pi / 180.0;
  Point c = centre(h);
  return {c.x + r * std::cos(t), c.y - r * std::sin(t)};
}

Point along(Point a, Point b, double t) { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }

} // namespace

std::string render_svg(const CurveWord& input) {
  const auto& complex = SurfaceComplex::instance();
  CurveWord w = canonical_form(input);
  StrandLayout layout = strand_layout(to_normal_coordinates(w));
  Counts k = counts(w);

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << int(2 * kCell) << "\" height=\"" << int(2 * kCell + kTop)
     << "\" font-family=\"sans-serif\" font-size=\"14\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"12\" y=\"24\">" << w.to_string() << "   (a,b,c) = (" << k.a() << "," << k.b() << "," << k.c()
     << ")</text>\n";

  for (Hexagon h : kAllHexagons) {
    const int id = hexagon_id(h);
    const auto& sides = complex.sides(h);
    os << "<g id=\"" << hexagon_name(h) << "\">\n<polygon fill=\"#f4f4f4\" stroke=\"black\" points=\"";
    for (int v = 0; v < 6; ++v) {
      Point p = vertex(h, v);
      os << p.x << "," << p.y << (v < 5 ? " " : "");
    }
    os << "\"/>\n";
    Point c = centre(h);
    os << "<text x=\"" << c.x << "\" y=\"" << c.y + 5 << "\" text-anchor=\"middle\" fill=\"#888\">"
       << hexagon_name(h) << "</text>\n";
    for (int i = 0; i < 6; ++i) {
      Point m = along(vertex(h, i, kRadius + 18), vertex(h, i + 1, kRadius + 18), 0.5);
      const char* colour = in_separating_system(sides[i].curve) ? "#bf3f1f" : "#1f5fbf";
      os << "<text x=\"" << m.x << "\" y=\"" << m.y + 5 << "\" text-anchor=\"middle\" fill=\"" << colour << "\">"
         << sides[i].name() << "</text>\n";
    }
    const auto& ends = layout.ends[id];
    auto position = [&](int side, int rank) {
      double t = double(rank + 1) / double(ends[side].size() + 1);
      return along(vertex(h, side), vertex(h, side + 1), t);
    };
    for (int i = 0; i < 6; ++i) {
      for (std::size_t r = 0; r < ends[i].size(); ++r) {
        auto [j, q] = ends[i][r];
        if (std::pair(j, q) < std::pair(i, static_cast<int>(r))) continue; // each chord once
        Point a = position(i, static_cast<int>(r)), b = position(j, q);
        os << "<line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y
           << "\" stroke=\"#2a9d4a\" stroke-width=\"2\"/>\n";
      }
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace goeritz
