#pragma once

#include <optional>

#include "latcov/anchored.hpp"
#include "latcov/covering.hpp"
#include "latcov/domain.hpp"

namespace latcov {

// K is inextensible iff A(theta) is constant; numerically, iff the relative
// spread of the refined profile stays within `tol`.
struct InextensibilityVerdict {
  bool inextensible = false;
  double a_max = 0.0;
  double a_min = 0.0;
  double relative_spread = 0.0;
  std::optional<double> witness_theta;  // angle of minimal A when extensible
};

InextensibilityVerdict inextensibility_verdict(const Domain& k, int n = 360, double tol = 1e-6);

// True iff some even shift k aligns the two anchor-angle triples so that
// t1 <= s_{k+1} <= t3 <= s_{k+3} <= t5 <= s_{k+5} <= t1 + 2*pi (closed
// inequalities, compared with `angle_tol`). Throws InvalidTriple for inputs
// that are not strictly increasing within one period.
bool interspersion_check(const std::array<double, 3>& first, const std::array<double, 3>& second,
                         double angle_tol = 1e-8);

// Interspersion over every pair of critical-triangle anchor triples.
// Throws NotApplicable when K has fewer than two distinct critical triangles.
bool all_pairs_interspersed(const Domain& k, double tol = 1e-7, int grid_n = 360);

// Circumscribed triangle (y+z-x, z+x-y, x+y-z); the midpoints of its sides
// are exactly the vertices of the input. Throws on degenerate input.
Triangle outer_billiard_triangle(const Triangle& t);

// True iff every sampled boundary point is a vertex of some critical
// triangle (area within area_tol, relative, of the maximum; vertex matched
// within 1e-6). By the main theorem this coincides with inextensibility at
// the matching tolerance.
bool circle_of_triangles_check(const Domain& k, int m = 360, double area_tol = 1e-6);

struct SasResult {
  double ratio = 0.0;            // A_max / area(K)
  double lower_bound = 0.0;      // 3*sqrt(3)/(4*pi), attained exactly by ellipses
  double corollary_bound = 0.0;  // 4*pi*A_max/sqrt(27) >= area(K)
};

SasResult sas_check(const Domain& k);

struct ExtensionWitness {
  Point point;        // boundary contact pushed outward by eps
  Domain superdomain; // conv(K ∪ {p, -p}) as a polygonal domain
  double delta_change;
};

// Exhibits extensibility: for an extensible K and small eps the returned
// superdomain is strictly larger yet keeps the critical determinant.
// Throws NotExtensible when the verdict reports K inextensible.
ExtensionWitness extension_witness(const Domain& k, double eps,
                                   std::optional<double> theta0 = std::nullopt);

}  // namespace latcov
