#include "latcov/family.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "latcov/anchored.hpp"

namespace latcov {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

struct EllipseFrame {
  Point center;
  double rotation;
};

Arc family_arc(const EllipseFrame& e, double s, double lo_deg, double hi_deg, double trim) {
  return Arc{e.center, std::exp(s), std::exp(-s), e.rotation,
             lo_deg * kDeg + trim, hi_deg * kDeg - trim};
}

// The 16-piece boundary in ccw order; degenerate segments are dropped.
std::vector<BoundaryPiece> family_pieces(const FamilyParams& p) {
  const double span = 30.0 * kDeg - 2.0 * p.trim;
  if (!(span > 0.0))
    throw ValidationError("ClosureFailure", "trim angle leaves no arc span");
  const EllipseFrame ea{{-p.a, p.a}, kPi / 4};     // arcs at offsets 0, 120, 240
  const EllipseFrame eb{{-p.a, -p.a}, 3 * kPi / 4};
  const EllipseFrame ema{{p.a, -p.a}, kPi / 4};    // arcs at offsets 60, 180, 300
  const EllipseFrame emb{{p.a, p.a}, 3 * kPi / 4};
  const double x = p.x_cut, y = p.y_cut;
  const bool segs = y > 1e-12;

  std::vector<BoundaryPiece> out;
  out.reserve(16);
  auto arc = [&](const EllipseFrame& e, double off) {
    out.push_back(family_arc(e, p.s, 75.0 + off, 105.0 + off, p.trim));
  };
  if (segs) out.push_back(Segment{{x, -y}, {x, y}});
  arc(ea, 240);
  arc(emb, 180);
  arc(ema, -60);
  if (segs) out.push_back(Segment{{y, x}, {-y, x}});
  arc(eb, 240);
  arc(ea, 0);
  arc(emb, -60);
  if (segs) out.push_back(Segment{{-x, y}, {-x, -y}});
  arc(ema, 60);
  arc(eb, 0);
  arc(ea, 120);
  if (segs) out.push_back(Segment{{-y, -x}, {y, -x}});
  arc(emb, 60);
  arc(ema, 180);
  arc(eb, 120);
  return out;
}

Domain family_domain(const FamilyParams& p, double closure_tol) {
  Domain::Options opt;
  opt.closure_tol = closure_tol;
  return Domain(family_pieces(p), opt);
}

// Corner junction: the first arc must start at the segment corner (x, y).
Point junction_corner(const FamilyParams& p) {
  Arc a = family_arc({{-p.a, p.a}, kPi / 4}, p.s, 75.0 + 240, 105.0 + 240, p.trim);
  return a.point_at(a.start);
}

// Arc-to-arc junction residual between the ea and emb arcs near the
// diagonal; every other junction is a dihedral image of this one or of the
// corner junction.
Point junction_diag(double s, double a, double trim) {
  Arc first = family_arc({{-a, a}, kPi / 4}, s, 75.0 + 240, 105.0 + 240, trim);
  Arc second = family_arc({{a, a}, 3 * kPi / 4}, s, 75.0 + 180, 105.0 + 180, trim);
  return first.point_at(first.end) - second.point_at(second.start);
}

bool newton_junction(double s, double& a, double& trim) {
  const double trim_cap = 15.0 * kDeg - 1e-9;
  for (int it = 0; it < 80; ++it) {
    Point f = junction_diag(s, a, trim);
    double res = norm(f);
    if (res < 1e-14) return true;
    const double h = 1e-8;
    Point fa = (1.0 / h) * (junction_diag(s, a + h, trim) - f);
    Point ft = (1.0 / h) * (junction_diag(s, a, trim + h) - f);
    double det = cross(fa, ft);
    if (std::abs(det) < 1e-14) return false;
    double da = -cross(f, ft) / det;
    double dt = -cross(fa, f) / det;
    double damp = 1.0;
    for (int ls = 0; ls < 10; ++ls) {
      double na = a + damp * da;
      double nt = std::min(trim + damp * dt, trim_cap);
      if (norm(junction_diag(s, na, nt)) < res) {
        a = na;
        trim = nt;
        break;
      }
      damp *= 0.5;
      if (ls == 9) return norm(junction_diag(s, a, trim)) < 1e-11;
    }
  }
  return norm(junction_diag(s, a, trim)) < 1e-11;
}

FamilyParams with_corner(double s, double a, double trim) {
  FamilyParams p{s, a, trim, 1.0, 0.0};
  Point c = junction_corner(p);
  p.x_cut = c.x;
  p.y_cut = c.y;
  return p;
}

double profile_spread(const Domain& k, int n) {
  std::vector<double> v = area_profile_values(k, n);
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return (*hi - *lo) / *hi;
}

// Derivative-free simplex minimization; rescue path when the junction
// Newton iteration stalls.
std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x0, double step, int max_iter) {
  const std::size_t n = x0.size();
  std::vector<std::pair<double, std::vector<double>>> simplex;
  simplex.reserve(n + 1);
  simplex.push_back({f(x0), x0});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x = x0;
    x[i] += step;
    simplex.push_back({f(x), x});
  }
  for (int it = 0; it < max_iter; ++it) {
    std::sort(simplex.begin(), simplex.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (simplex.back().first - simplex.front().first < 1e-30) break;
    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[i].second[d] / n;
    auto blend = [&](double c) {
      std::vector<double> x(n);
      for (std::size_t d = 0; d < n; ++d)
        x[d] = centroid[d] + c * (centroid[d] - simplex.back().second[d]);
      return x;
    };
    std::vector<double> xr = blend(1.0);
    double fr = f(xr);
    if (fr < simplex.front().first) {
      std::vector<double> xe = blend(2.0);
      double fe = f(xe);
      simplex.back() = fe < fr ? std::make_pair(fe, xe) : std::make_pair(fr, xr);
    } else if (fr < simplex[n - 1].first) {
      simplex.back() = {fr, xr};
    } else {
      std::vector<double> xc = blend(-0.5);
      double fc = f(xc);
      if (fc < simplex.back().first) {
        simplex.back() = {fc, xc};
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t d = 0; d < n; ++d)
            simplex[i].second[d] = 0.5 * (simplex[i].second[d] + simplex[0].second[d]);
          simplex[i].first = f(simplex[i].second);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return simplex.front().second;
}

// Combined residual: squared junction gaps plus (when nearly closed) the
// variance of the anchored-area profile; invalid assemblies get a penalty.
double combined_objective(const std::vector<double>& x) {
  FamilyParams p{x[0], x[1], x[2], x[3], x[4]};
  double rc;
  try {
    rc = family_closure_residual(p);
  } catch (const ValidationError&) {
    return 1e6;
  }
  double obj = rc * rc;
  if (rc < 1e-6) {
    try {
      Domain d = family_domain(p, 1e-5);
      std::vector<double> v = area_profile_values(d, 720);
      double mean = 0.0;
      for (double a : v) mean += a / v.size();
      double var = 0.0;
      for (double a : v) var += (a - mean) * (a - mean) / v.size();
      obj += var;
    } catch (const ValidationError&) {
      obj += 1.0;
    }
  }
  return obj;
}

}  // namespace

double family_closure_residual(const FamilyParams& p) {
  std::vector<BoundaryPiece> pieces = family_pieces(p);
  double worst = 0.0;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    worst = std::max(worst, distance(piece_end(pieces[i]),
                                     piece_start(pieces[(i + 1) % pieces.size()])));
  return worst;
}

Domain build_family_domain(const FamilyParams& p) {
  double gap = family_closure_residual(p);
  if (gap > 1e-6)
    throw ValidationError("ClosureFailure",
                          "max junction gap " + std::to_string(gap) + " exceeds 1e-6");
  return family_domain(p, 1e-6);
}

FamilyParams solve_family(double s) {
  if (!(s >= 0.0)) throw ValidationError("InvalidArgument", "family parameter s must be >= 0");
  if (s == 0.0) return FamilyParams{0.0, 0.0, 0.0, 1.0, 0.0};

  const int steps = std::max(1, static_cast<int>(std::ceil(s / 0.025)));
  // Continuation state: the last two solved members, starting from the disk.
  double s_last = 0.0, a_last = 0.0, trim_last = 0.0;
  double s_older = 0.0, a_older = 0.0, trim_older = 0.0;
  bool have_two = false;
  double a = 0.0, trim = 0.0;
  for (int i = 1; i <= steps; ++i) {
    double si = s * i / steps;
    double seed_a, seed_trim;
    if (have_two) {
      double f = (si - s_last) / (s_last - s_older);
      seed_a = a_last + (a_last - a_older) * f;
      seed_trim = trim_last + (trim_last - trim_older) * f;
    } else {
      // Near the disk both offsets grow like s itself.
      seed_a = a_last + (si - s_last);
      seed_trim = trim_last + (si - s_last);
    }
    a = seed_a;
    trim = std::min(seed_trim, 15.0 * kDeg - 1e-6);
    if (!newton_junction(si, a, trim)) {
      // Rescue with the full derivative-free search, then polish.
      FamilyParams seed = with_corner(si, seed_a, std::min(seed_trim, 15.0 * kDeg - 1e-6));
      std::vector<double> best = nelder_mead(
          combined_objective, {si, seed.a, seed.trim, seed.x_cut, seed.y_cut}, 1e-3, 400);
      a = best[1];
      trim = best[2];
      if (!newton_junction(si, a, trim)) {
        throw SolveError("junction residual " +
                         std::to_string(norm(junction_diag(si, a, trim))) + " at s = " +
                         std::to_string(si));
      }
    }
    s_older = s_last;
    a_older = a_last;
    trim_older = trim_last;
    s_last = si;
    a_last = a;
    trim_last = trim;
    have_two = true;
  }

  FamilyParams params = with_corner(s, a, trim);
  double gap = family_closure_residual(params);
  if (gap > 1e-9)
    throw SolveError("closure residual " + std::to_string(gap) + " exceeds 1e-9");
  Domain k = [&] {
    try {
      return family_domain(params, 1e-9);
    } catch (const ValidationError& e) {
      throw SolveError(std::string("solved parameters give an invalid domain: ") + e.what());
    }
  }();
  double spread = profile_spread(k, 720);
  if (!(spread < 1e-6))
    throw SolveError("anchored-area spread " + std::to_string(spread) + " exceeds 1e-6");
  return params;
}

}  // namespace latcov
