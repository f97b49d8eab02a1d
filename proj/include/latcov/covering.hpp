#pragma once

#include "latcov/anchored.hpp"
#include "latcov/domain.hpp"

namespace latcov {

struct CoveringReport {
  Lattice lattice;
  int sampled_points = 0;
  std::vector<Point> uncovered;  // empty iff covered at this resolution
  double density = 0.0;          // area(K) / d(lattice)
};

// Lattice with basis (x - z, y - z) for triangle vertices (x, y, z). For a
// critical triangle this is the tiling lattice of the hexagon conv(T, -T):
// each hexagon edge is matched to its opposite edge by one of x-z, y-z,
// x-y, so the hexagon (and hence K, which contains it) covers the plane.
Lattice lattice_from_triangle(const Triangle& t);

// Critical covering lattice built from a critical triangle of K;
// d(lattice) = 2*area(T) = Delta(K).
Lattice critical_lattice(const Domain& k);

// Samples a resolution x resolution grid over the fundamental parallelogram
// and tests each sample against all lattice translates of K that could
// reach it (enumerated out to circumradius(K) plus the cell diameter, so
// truncation cannot produce false negatives).
CoveringReport covering_check(const Domain& k, const Lattice& l, int resolution);

double covering_density(const Domain& k, const Lattice& l);

}  // namespace latcov
