#include "latcov/covering.hpp"

#include <algorithm>
#include <cmath>

namespace latcov {

Lattice lattice_from_triangle(const Triangle& t) {
  return Lattice(t.a() - t.c(), t.b() - t.c());
}

Lattice critical_lattice(const Domain& k) {
  std::vector<CriticalTriangle> crit = critical_triangles(k);
  if (crit.empty()) throw ValidationError("NotApplicable", "no critical triangle found");
  return lattice_from_triangle(crit.front().triangle);
}

CoveringReport covering_check(const Domain& k, const Lattice& l, int resolution) {
  if (resolution < 16)
    throw ValidationError("InvalidArgument", "covering check needs resolution >= 16");
  const Point b1 = l.basis1(), b2 = l.basis2();
  // Index window around the rounded basis coordinates of each sample: a
  // translate can only cover p if |B*k - p| <= circumradius, and
  // |B^-1 v|_inf <= max(|b1|,|b2|)/det * |v|, so this window cannot miss a
  // covering translate.
  const double det = std::abs(cross(b1, b2));
  const double inv_norm = std::max(norm(b1), norm(b2)) / det;
  const int window = static_cast<int>(std::ceil(k.circumradius() * inv_norm)) + 2;

  CoveringReport report{l, resolution * resolution, {}, covering_density(k, l)};
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      double fi = (i + 0.5) / resolution, fj = (j + 0.5) / resolution;
      Point p = fi * b1 + fj * b2;
      Point c = l.coordinates(p);
      int ci = static_cast<int>(std::lround(c.x)), cj = static_cast<int>(std::lround(c.y));
      bool covered = false;
      for (int di = -window; di <= window && !covered; ++di)
        for (int dj = -window; dj <= window && !covered; ++dj) {
          Point q = p - l.point(ci + di, cj + dj);
          if (norm(q) > k.circumradius() + 1e-9) continue;
          if (k.contains(q, 1e-12)) covered = true;
        }
      if (!covered) report.uncovered.push_back(p);
    }
  }
  return report;
}

double covering_density(const Domain& k, const Lattice& l) {
  return k.area() / l.determinant();
}

}  // namespace latcov
