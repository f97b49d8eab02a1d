#include "latcov/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "latcov/anchored.hpp"
#include "latcov/covering.hpp"

namespace latcov {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct Mapper {
  double scale = 1.0;
  double ox = 0.0, oy = 0.0;

  Point map(Point p) const { return {ox + scale * p.x, oy - scale * p.y}; }
};

std::string domain_path(const Domain& k, const Mapper& m, Point offset) {
  std::string d;
  Point start = m.map(piece_start(k.pieces().front()) + offset);
  d += "M " + num(start.x) + " " + num(start.y);
  for (const BoundaryPiece& p : k.pieces()) {
    Point end = m.map(piece_end(p) + offset);
    if (std::holds_alternative<Segment>(p)) {
      d += " L " + num(end.x) + " " + num(end.y);
    } else {
      const auto& a = std::get<Arc>(p);
      int large = a.span() > kPi ? 1 : 0;
      // World ccw becomes sweep=0 under the y flip; rotation flips sign.
      d += " A " + num(m.scale * a.rx) + " " + num(m.scale * a.ry) + " " +
           num(-a.rotation * 180.0 / kPi) + " " + std::to_string(large) + " 0 " + num(end.x) +
           " " + num(end.y);
    }
  }
  d += " Z";
  return d;
}

}  // namespace

std::string render_svg(const Domain& k, const RenderOptions& options) {
  std::vector<Point> lattice_offsets;
  if (options.lattice) {
    Lattice l = critical_lattice(k);
    for (int i = -2; i <= 2; ++i)
      for (int j = -2; j <= 2; ++j)
        if (i != 0 || j != 0) lattice_offsets.push_back(l.point(i, j));
  }
  std::vector<CriticalTriangle> tris;
  if (options.triangles > 0) {
    tris = critical_triangles(k);
    std::sort(tris.begin(), tris.end(), [](const CriticalTriangle& a, const CriticalTriangle& b) {
      return a.anchor_angles[0] < b.anchor_angles[0];
    });
    if (static_cast<int>(tris.size()) > options.triangles)
      tris.erase(tris.begin() + options.triangles, tris.end());
  }

  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  auto grow = [&](Point p) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  };
  for (const Point& v : k.approximation().vertices()) {
    grow(v);
    for (const Point& off : lattice_offsets) grow(v + off);
  }

  const double side = options.size;
  const double usable = side * (1.0 - 2.0 * options.padding);
  const double span = std::max(hi_x - lo_x, hi_y - lo_y);
  Mapper m;
  m.scale = usable / span;
  m.ox = side / 2.0 - m.scale * (lo_x + hi_x) / 2.0;
  m.oy = side / 2.0 + m.scale * (lo_y + hi_y) / 2.0;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(options.size) + "\" height=\"" + std::to_string(options.size) +
         "\" viewBox=\"0 0 " + std::to_string(options.size) + " " +
         std::to_string(options.size) + "\">\n";
  for (const Point& off : lattice_offsets)
    svg += "  <path d=\"" + domain_path(k, m, off) +
           "\" fill=\"none\" stroke=\"#b0b0b0\" stroke-width=\"1\"/>\n";
  svg += "  <path d=\"" + domain_path(k, m, {0, 0}) +
         "\" fill=\"#f0f0f0\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (const CriticalTriangle& t : tris) {
    auto v = t.triangle.vertices();
    svg += "  <polygon points=\"";
    for (int i = 0; i < 3; ++i) {
      Point p = m.map(v[i]);
      svg += num(p.x) + "," + num(p.y) + (i < 2 ? " " : "");
    }
    svg += "\" fill=\"none\" stroke=\"#3050c0\" stroke-width=\"1.5\"/>\n";
  }
  Point o = m.map({0, 0});
  svg += "  <circle cx=\"" + num(o.x) + "\" cy=\"" + num(o.y) +
         "\" r=\"3\" fill=\"black\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace latcov
