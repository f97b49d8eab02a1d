#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "latcov/errors.hpp"

namespace latcov {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator-(Point a) { return {-a.x, -a.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline Point& operator+=(Point& a, Point b) { a = a + b; return a; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point perp(Point a) { return {-a.y, a.x}; }

inline Point normalized(Point a) {
  double n = norm(a);
  return {a.x / n, a.y / n};
}

// Direction vector u_theta = (cos theta, sin theta).
inline Point unit_vector(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Angle of p in [0, 2*pi).
double angle_of(Point p);

// Reduce an angle into [0, 2*pi).
double normalize_angle(double a);

// Smallest absolute difference between two angles, in [0, pi].
double angle_distance(double a, double b);

Point rotate(Point p, double angle);

// Unsigned area |cross(b-a, c-a)| / 2.
double triangle_area(Point a, Point b, Point c);

double point_segment_distance(Point p, Point a, Point b);

// Triangle canonicalized to counter-clockwise vertex order at construction,
// so area() is unsigned downstream. Degenerate (collinear) triangles are
// representable; callers that need non-degeneracy check area() > 0.
class Triangle {
 public:
  Triangle(Point a, Point b, Point c);

  Point a() const { return a_; }
  Point b() const { return b_; }
  Point c() const { return c_; }
  std::array<Point, 3> vertices() const { return {a_, b_, c_}; }

  double area() const;

  // Minimum over edges of the signed distance from p to the edge line
  // (positive strictly inside, zero on the boundary).
  double edge_clearance(Point p) const;
  bool contains(Point p, double margin = 0.0) const { return edge_clearance(p) >= margin; }

 private:
  Point a_, b_, c_;
};

// Planar lattice B * Z^2 given by two basis vectors (columns of B).
class Lattice {
 public:
  Lattice(Point b1, Point b2);

  Point basis1() const { return b1_; }
  Point basis2() const { return b2_; }
  double determinant() const { return std::abs(cross(b1_, b2_)); }

  Point point(int i, int j) const { return {i * b1_.x + j * b2_.x, i * b1_.y + j * b2_.y}; }

  // Real coordinates of p in the basis (solves B * c = p).
  Point coordinates(Point p) const;

 private:
  Point b1_, b2_;
};

inline double lattice_determinant(const Lattice& l) { return l.determinant(); }

// Convex polygon with counter-clockwise vertex order. Construction validates
// convexity (cross products of consecutive edges >= 0 up to tolerance) and
// rejects repeated vertices and empty input.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }

  double area() const;
  bool contains(Point p, double slack = 1e-12) const;

  // Distance from p to the polygon as a set (0 if inside).
  double distance_to(Point p) const;

 private:
  std::vector<Point> verts_;
};

// Monotone-chain hull; collinear points are dropped.
ConvexPolygon convex_hull(std::vector<Point> points);

// Hausdorff distance between convex polygons as sets. For convex sets the
// supremum is attained at vertices, so the max over vertices of the distance
// to the other polygon is exact.
double hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& q);

}  // namespace latcov
