#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "latcov/geom.hpp"

namespace latcov {

struct Segment {
  Point from;
  Point to;
};

// Elliptic arc: tau -> center + R(rotation) * (rx*cos(tau), ry*sin(tau)),
// traversed with increasing parameter from start to end (counter-clockwise
// around the ellipse center). Span end - start must lie in (0, 2*pi).
struct Arc {
  Point center;
  double rx = 1.0;
  double ry = 1.0;
  double rotation = 0.0;
  double start = 0.0;
  double end = 0.0;

  double span() const { return end - start; }
  Point point_at(double tau) const {
    return center + rotate({rx * std::cos(tau), ry * std::sin(tau)}, rotation);
  }
  // Outward unit normal of the ellipse at parameter tau.
  Point normal_at(double tau) const {
    return normalized(rotate({std::cos(tau) / rx, std::sin(tau) / ry}, rotation));
  }
};

using BoundaryPiece = std::variant<Segment, Arc>;

Point piece_start(const BoundaryPiece& p);
Point piece_end(const BoundaryPiece& p);
Point piece_midpoint(const BoundaryPiece& p);

struct SupportResult {
  double height = 0.0;
  std::variant<Point, Segment> contact;

  bool is_segment() const { return std::holds_alternative<Segment>(contact); }
  // The contact point, or the contact segment's midpoint.
  Point contact_point() const;
};

struct Chord {
  Point a;  // endpoint with the larger projection onto perp(u_theta)
  Point b;
  double width = 0.0;
};

struct DomainOptions {
  int polygonize_n = 4096;    // cached approximation has 2*polygonize_n vertices
  double closure_tol = 1e-9;  // max allowed junction gap
};

// Origin-symmetric convex region bounded by one closed counter-clockwise
// chain of segments and elliptic arcs. Immutable after construction; the
// polygonal approximation is cached eagerly, so all queries are pure and
// safe for concurrent use.
class Domain {
 public:
  using Options = DomainOptions;

  explicit Domain(std::vector<BoundaryPiece> pieces, Options options = Options());

  const std::vector<BoundaryPiece>& pieces() const { return pieces_; }
  int polygonize_n() const { return options_.polygonize_n; }
  const ConvexPolygon& approximation() const { return approx_; }
  bool is_polygonal() const { return polygonal_; }

  // Piece junction points, in boundary order. For polygonal domains these
  // are exactly the polygon corners.
  std::vector<Point> corners() const;

  // Upper bound on max |p| over the boundary.
  double circumradius() const { return circumradius_; }

  // Support height h(theta) = max over K of <p, u_theta>, with the contact
  // set. The contact is a Segment exactly when a boundary edge's outward
  // normal is within 1e-9 rad of theta; otherwise a single point.
  SupportResult support(double theta) const;
  double support_height(double theta) const { return support(theta).height; }

  // K intersected with the line <p, u_theta> = t. Throws OutOfSlab when
  // t is outside [-h(theta), h(theta)].
  Chord chord(double theta, double t) const;

  // Exact area: shoelace terms for segments plus elliptic sector terms.
  double area() const;

  // 2n boundary vertices, including all piece junctions, closed under
  // negation, in ccw order. Vertices are allocated to pieces in proportion
  // to the angle they subtend at the origin.
  ConvexPolygon polygonize(int n) const;

  // Exact membership test against the boundary pieces, with `slack` applied
  // toward inclusion so that boundary points count as covered.
  bool contains(Point p, double slack = 1e-12) const;

 private:
  void validate();
  int piece_at_angle(double phi) const;

  std::vector<BoundaryPiece> pieces_;
  Options options_;
  bool polygonal_ = false;
  double circumradius_ = 0.0;
  std::vector<double> start_angles_;  // angle of each piece start, unwrapped ccw
  std::vector<bool> origin_in_ellipse_;
  ConvexPolygon approx_;
};

Domain make_disk(double r);
Domain make_ellipse(double a, double b, double phi = 0.0);
Domain make_parallelogram(Point u, Point v);
Domain make_regular_polygon(int n, double r);

// Image of K under a linear map with positive determinant. Segments map to
// segments; arcs are re-expressed through the SVD of the mapped ellipse
// frame.
Domain linear_image(const Domain& k, double m00, double m01, double m10, double m11);

}  // namespace latcov
