#include "latcov/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace latcov {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;
}  // namespace

InextensibilityVerdict inextensibility_verdict(const Domain& k, int n, double tol) {
  if (n < 360) throw ValidationError("InvalidArgument", "verdict needs n >= 360");
  ProfileExtrema ex = profile_extrema(k, n);
  InextensibilityVerdict v;
  v.a_max = ex.a_max;
  v.a_min = ex.a_min;
  v.relative_spread = (ex.a_max - ex.a_min) / ex.a_max;
  v.inextensible = v.relative_spread <= tol;
  if (!v.inextensible) v.witness_theta = ex.theta_min;
  return v;
}

bool interspersion_check(const std::array<double, 3>& first, const std::array<double, 3>& second,
                         double angle_tol) {
  auto check = [](const std::array<double, 3>& t) {
    if (!(t[0] < t[1] && t[1] < t[2] && t[2] < t[0] + kTau))
      throw ValidationError("InvalidTriple",
                            "anchor triple must be strictly increasing within one period");
  };
  check(first);
  check(second);

  // Shift the first triple so it starts in [0, 2*pi), keeping its gaps.
  double base = normalize_angle(first[0]);
  const double t1 = base, t3 = base + (first[1] - first[0]), t5 = base + (first[2] - first[0]);

  // All six angles of the second triangle and its negation, ascending.
  std::array<double, 6> s;
  for (int i = 0; i < 3; ++i) {
    s[i] = normalize_angle(second[i]);
    s[i + 3] = normalize_angle(second[i] + kPi);
  }
  std::sort(s.begin(), s.end());
  auto ext = [&](int j) { return s[j % 6] + kTau * (j / 6); };

  for (int k = 0; k <= 4; k += 2) {
    for (int m = -2; m <= 2; ++m) {
      double c1 = ext(k) + kTau * m;
      double c3 = ext(k + 2) + kTau * m;
      double c5 = ext(k + 4) + kTau * m;
      if (t1 - angle_tol <= c1 && c1 <= t3 + angle_tol && t3 - angle_tol <= c3 &&
          c3 <= t5 + angle_tol && t5 - angle_tol <= c5 && c5 <= t1 + kTau + angle_tol)
        return true;
    }
  }
  return false;
}

bool all_pairs_interspersed(const Domain& k, double tol, int grid_n) {
  std::vector<CriticalTriangle> crit = critical_triangles(k, tol, grid_n);
  if (crit.size() < 2)
    throw ValidationError("NotApplicable",
                          "fewer than two distinct critical triangles");
  for (std::size_t i = 0; i < crit.size(); ++i)
    for (std::size_t j = i + 1; j < crit.size(); ++j)
      if (!interspersion_check(crit[i].anchor_angles, crit[j].anchor_angles)) return false;
  return true;
}

Triangle outer_billiard_triangle(const Triangle& t) {
  if (t.area() <= 0.0)
    throw ValidationError("DegenerateTriangle", "outer billiard needs a non-degenerate triangle");
  Point x = t.a(), y = t.b(), z = t.c();
  return Triangle(y + z - x, z + x - y, x + y - z);
}

bool circle_of_triangles_check(const Domain& k, int m, double area_tol) {
  if (m < 36) throw ValidationError("InvalidArgument", "circle check needs m >= 36 samples");
  ProfileExtrema ex = profile_extrema(k, std::max(360, m));
  // Constant profile: every boundary point anchors a maximal triangle.
  if ((ex.a_max - ex.a_min) / ex.a_max <= area_tol) return true;
  const double cut = ex.a_max * (1.0 - area_tol);

  const auto& pieces = k.pieces();
  const int np = static_cast<int>(pieces.size());
  const int per = std::max(1, (m + np - 1) / np);

  auto normal_at_end = [](const BoundaryPiece& p) {
    if (const auto* s = std::get_if<Segment>(&p)) {
      Point d = s->to - s->from;
      return normalized(Point{d.y, -d.x});
    }
    const auto& a = std::get<Arc>(p);
    return a.normal_at(a.end);
  };
  auto normal_at = [](const BoundaryPiece& p, double f) {
    if (const auto* s = std::get_if<Segment>(&p)) {
      Point d = s->to - s->from;
      return normalized(Point{d.y, -d.x});
    }
    const auto& a = std::get<Arc>(p);
    return a.normal_at(a.start + f * a.span());
  };

  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < per; ++j) {
      double f = static_cast<double>(j) / per;
      double lo, hi;
      if (j == 0) {
        // Corner: the support cone spans from the previous piece's end
        // normal to this piece's start normal.
        lo = angle_of(normal_at_end(pieces[(i + np - 1) % np]));
        hi = lo + normalize_angle(angle_of(normal_at(pieces[i], 0.0)) - lo);
      } else {
        lo = hi = angle_of(normal_at(pieces[i], f));
      }
      double best = std::max(anchored_area(k, lo), anchored_area(k, hi));
      if (hi - lo > 1e-9 && best < cut) {
        // Refine inside the cone before giving up on this corner.
        double a = lo, b = hi;
        for (int it = 0; it < 40 && b - a > 1e-8; ++it) {
          double c = a + (b - a) / 3, d = b - (b - a) / 3;
          if (anchored_area(k, c) < anchored_area(k, d))
            a = c;
          else
            b = d;
        }
        best = std::max(best, anchored_area(k, 0.5 * (a + b)));
      }
      if (best < cut) return false;
    }
  }
  return true;
}

SasResult sas_check(const Domain& k) {
  SasResult r;
  double a_max = max_anchored_area(k);
  r.ratio = a_max / k.area();
  r.lower_bound = 3.0 * std::sqrt(3.0) / (4.0 * kPi);
  r.corollary_bound = 4.0 * kPi * a_max / std::sqrt(27.0);
  return r;
}

ExtensionWitness extension_witness(const Domain& k, double eps, std::optional<double> theta0) {
  if (!(eps > 0)) throw ValidationError("InvalidArgument", "eps must be positive");
  InextensibilityVerdict v = inextensibility_verdict(k);
  if (v.inextensible)
    throw ValidationError("NotExtensible", "domain has constant anchored-area profile");
  double th = theta0.value_or(*v.witness_theta);
  Point contact = k.support(th).contact_point();
  Point p = contact + eps * unit_vector(th);

  // Polygonal domains hull down to their exact corners; curved ones get a
  // bounded polygonization so the superdomain stays tractable downstream.
  int n = k.is_polygonal() ? k.polygonize_n() : std::min(k.polygonize_n(), 512);
  std::vector<Point> pts = k.polygonize(n).vertices();
  pts.push_back(p);
  pts.push_back(-p);
  ConvexPolygon hull = convex_hull(std::move(pts));

  std::vector<BoundaryPiece> pieces;
  const auto& hv = hull.vertices();
  pieces.reserve(hv.size());
  for (std::size_t i = 0; i < hv.size(); ++i)
    pieces.push_back(Segment{hv[i], hv[(i + 1) % hv.size()]});
  Domain::Options opt;
  opt.polygonize_n = k.polygonize_n();
  Domain super(std::move(pieces), opt);

  double delta = critical_determinant(super) - critical_determinant(k);
  return {p, std::move(super), delta};
}

}  // namespace latcov
