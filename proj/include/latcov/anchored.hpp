#pragma once

#include <array>

#include "latcov/domain.hpp"

namespace latcov {

// Maximal-area inscribed triangle with one vertex on the support line
// L(theta) and the opposite side parallel to it. The base endpoints are
// unique; when the support contact is a whole edge the apex is reported at
// the contact segment's midpoint (the area does not depend on that choice).
struct AnchoredTriangle {
  double theta = 0.0;
  std::variant<Point, Segment> apex_contact;
  Point apex;
  Point base_y;  // (apex, base_y, base_z) is counter-clockwise
  Point base_z;
  double base_height = 0.0;  // level t of the base chord
  double area = 0.0;

  Triangle triangle() const { return Triangle(apex, base_y, base_z); }
};

AnchoredTriangle anchored_triangle(const Domain& k, double theta);

// A(theta) sampled on the uniform grid theta_i = i*pi/n over [0, pi);
// A(theta + pi) = A(theta) justifies the half period.
struct AreaProfile {
  std::vector<double> thetas;
  std::vector<double> values;
  double a_max = 0.0;                // refined maximum
  std::vector<double> argmax_set;    // angles attaining a_max (refined)
  double relative_spread = 0.0;      // (max - min)/max over grid values
};

AreaProfile area_profile(const Domain& k, int n);

// Grid values only, no refinement. Cheap core used by solvers.
std::vector<double> area_profile_values(const Domain& k, int n);

// A(theta) for a single angle (= anchored_triangle(k, theta).area).
double anchored_area(const Domain& k, double theta);

// Refined maximum of A over the whole period, via grid scan plus local
// golden-section refinement around grid maxima.
double max_anchored_area(const Domain& k, int grid_n = 360);

// Refined extrema of A(theta) over one period.
struct ProfileExtrema {
  double a_max = 0.0;
  double a_min = 0.0;
  double theta_max = 0.0;
  double theta_min = 0.0;
};

ProfileExtrema profile_extrema(const Domain& k, int n = 360);

struct CriticalTriangle {
  Triangle triangle;
  std::array<double, 3> anchor_angles;  // ascending, in [0, 2*pi)
};

// Distinct critical triangles (area within `tol`, relative, of the maximum),
// deduplicated by vertex set with T and -T folded together. For polygonal
// domains the triangles are enumerated exactly over corner triples; for
// domains with arcs they are sampled from a grid of `grid_n` anchor angles,
// so completeness is guaranteed only in the polygonal case.
std::vector<CriticalTriangle> critical_triangles(const Domain& k, double tol = 1e-7,
                                                 int grid_n = 360);

// Critical determinant Delta(K) = 2 * max A(theta).
double critical_determinant(const Domain& k);

// Exhaustive O(n^3) maximum-area triangle over polygon vertex triples.
// Exact for polygons, and the suite's independent oracle for Delta.
Triangle brute_max_triangle(const ConvexPolygon& p);

// Anchor angles of a maximal inscribed triangle: for each vertex, the
// direction of the support line through it that is parallel to the opposite
// side. Returned ascending in [0, 2*pi).
std::array<double, 3> anchor_angles_of(const Triangle& t);

}  // namespace latcov
