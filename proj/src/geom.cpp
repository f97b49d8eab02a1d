#include "latcov/geom.hpp"

#include <algorithm>
#include <numbers>

namespace latcov {

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;

double coord_scale(const std::vector<Point>& pts) {
  double s = 1.0;
  for (const Point& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return s;
}
}  // namespace

double angle_of(Point p) { return normalize_angle(std::atan2(p.y, p.x)); }

double normalize_angle(double a) {
  double r = std::fmod(a, kTau);
  if (r < 0) r += kTau;
  return r;
}

double angle_distance(double a, double b) {
  double d = std::abs(normalize_angle(a) - normalize_angle(b));
  return std::min(d, kTau - d);
}

Point rotate(Point p, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

double triangle_area(Point a, Point b, Point c) {
  return std::abs(cross(b - a, c - a)) / 2.0;
}

double point_segment_distance(Point p, Point a, Point b) {
  Point d = b - a;
  double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, a);
  double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return distance(p, a + t * d);
}

Triangle::Triangle(Point a, Point b, Point c) : a_(a), b_(b), c_(c) {
  if (cross(b_ - a_, c_ - a_) < 0) std::swap(b_, c_);
}

double Triangle::area() const { return triangle_area(a_, b_, c_); }

double Triangle::edge_clearance(Point p) const {
  double m = std::numeric_limits<double>::infinity();
  const std::array<Point, 3> v = vertices();
  for (int i = 0; i < 3; ++i) {
    Point e = v[(i + 1) % 3] - v[i];
    double len = norm(e);
    if (len == 0.0) return -distance(p, v[i]);
    m = std::min(m, cross(e, p - v[i]) / len);
  }
  return m;
}

Lattice::Lattice(Point b1, Point b2) : b1_(b1), b2_(b2) {
  double scale2 = std::max({1.0, dot(b1, b1), dot(b2, b2)});
  if (std::abs(cross(b1, b2)) <= 1e-12 * scale2)
    throw ValidationError("SingularBasis", "lattice basis vectors are linearly dependent");
}

Point Lattice::coordinates(Point p) const {
  double det = cross(b1_, b2_);
  return {cross(p, b2_) / det, cross(b1_, p) / det};
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : verts_(std::move(vertices)) {
  if (verts_.size() < 3)
    throw ValidationError("EmptyPolygon", "convex polygon needs at least 3 vertices");
  double s = coord_scale(verts_);
  const std::size_t n = verts_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = verts_[i];
    const Point& b = verts_[(i + 1) % n];
    const Point& c = verts_[(i + 2) % n];
    if (distance(a, b) <= 1e-14 * s)
      throw ValidationError("RepeatedVertex", "repeated polygon vertex", static_cast<int>(i));
    if (cross(b - a, c - b) < -1e-9 * s * s)
      throw ValidationError("NotConvex", "vertices are not in convex ccw order",
                            static_cast<int>(i));
  }
}

double ConvexPolygon::area() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < verts_.size(); ++i)
    acc += cross(verts_[i], verts_[(i + 1) % verts_.size()]);
  return acc / 2.0;
}

bool ConvexPolygon::contains(Point p, double slack) const {
  double s = coord_scale(verts_);
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    Point a = verts_[i];
    Point b = verts_[(i + 1) % verts_.size()];
    if (cross(b - a, p - a) < -slack * s) return false;
  }
  return true;
}

double ConvexPolygon::distance_to(Point p) const {
  if (contains(p)) return 0.0;
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < verts_.size(); ++i)
    d = std::min(d, point_segment_distance(p, verts_[i], verts_[(i + 1) % verts_.size()]));
  return d;
}

ConvexPolygon convex_hull(std::vector<Point> points) {
  if (points.size() < 3) throw ValidationError("EmptyPolygon", "hull needs at least 3 points");
  std::sort(points.begin(), points.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  points.erase(std::unique(points.begin(), points.end(),
                           [](Point a, Point b) { return a.x == b.x && a.y == b.y; }),
               points.end());
  double s = coord_scale(points);
  const double eps = 1e-12 * s * s;
  std::vector<Point> h(2 * points.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], points[i] - h[k - 2]) <= eps) --k;
    h[k++] = points[i];
  }
  for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 1] - h[k - 2], points[i] - h[k - 2]) <= eps) --k;
    h[k++] = points[i];
  }
  h.resize(k - 1);
  return ConvexPolygon(std::move(h));
}

double hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& q) {
  double d = 0.0;
  for (const Point& v : p.vertices()) d = std::max(d, q.distance_to(v));
  for (const Point& v : q.vertices()) d = std::max(d, p.distance_to(v));
  return d;
}

}  // namespace latcov
