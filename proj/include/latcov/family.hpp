#pragma once

#include "latcov/domain.hpp"

namespace latcov {

// Parameters of the disk-to-square family of constant-profile domains.
// The boundary is 4 axis-aligned segments {x = ±x_cut, |y| <= y_cut} and
// {y = ±x_cut, |x| <= y_cut} plus 12 arcs taken from 4 unit-determinant
// ellipses with semi-axes e^s, e^-s:
//   centers (-a, a), (-a, -a): rotations pi/4, 3*pi/4, arc parameter
//     intervals [75deg + trim, 105deg - trim] + k*120deg, k = 0, 1, 2;
//   centers (a, -a), (a, a): the same rotations and intervals shifted by
//     180deg (the centrally symmetric images).
// Each arc is the locus of critical-triangle vertices of its ellipse, so an
// exactly closed member has constant anchored-area profile 3*sqrt(3)/4.
struct FamilyParams {
  double s = 0.0;     // log semi-axis
  double a = 0.0;     // center offset
  double trim = 0.0;  // arc trim angle (radians)
  double x_cut = 1.0; // segment line position
  double y_cut = 0.0; // segment half-length
};

// Assembles the 16-piece boundary (degenerate segments are dropped, so the
// s = 0 member is the unit disk as 12 arcs). Throws ClosureFailure with the
// max gap when the pieces do not meet within 1e-6.
Domain build_family_domain(const FamilyParams& p);

// Junction residuals of the assembly: the segment-to-arc corner gap and the
// arc-to-arc gap (all other junctions are symmetry images of these two).
double family_closure_residual(const FamilyParams& p);

// Finds (a, trim, x_cut, y_cut) for a given s by parameter continuation from
// the disk member, accepting only when the junction gaps fall below 1e-9 and
// the relative anchored-area spread on a 720-grid is below 1e-6.
FamilyParams solve_family(double s);

}  // namespace latcov
