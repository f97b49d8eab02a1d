#include "latcov/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace latcov {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;

// Angular tolerance for classifying a support contact as a whole edge.
constexpr double kEdgeNormalTol = 1e-9;

Point segment_outward_normal(const Segment& s) {
  Point d = s.to - s.from;
  return normalized({d.y, -d.x});
}

struct PieceSupport {
  double value;
  Point point;
};

PieceSupport segment_support(const Segment& s, Point u) {
  double v0 = dot(s.from, u), v1 = dot(s.to, u);
  return v0 >= v1 ? PieceSupport{v0, s.from} : PieceSupport{v1, s.to};
}

// Max of <p,u> over the arc: closed-form peak if its parameter falls inside
// the span, otherwise an endpoint.
PieceSupport arc_support(const Arc& a, Point u) {
  Point v = rotate(u, -a.rotation);
  double ca = a.rx * v.x, cb = a.ry * v.y;
  double base = dot(a.center, u);
  PieceSupport best{base + ca * std::cos(a.start) + cb * std::sin(a.start), a.point_at(a.start)};
  double at_end = base + ca * std::cos(a.end) + cb * std::sin(a.end);
  if (at_end > best.value) best = {at_end, a.point_at(a.end)};
  double peak = std::atan2(cb, ca);
  double tau = a.start + normalize_angle(peak - a.start);
  if (tau <= a.end) {
    double val = base + std::hypot(ca, cb);
    if (val > best.value) best = {val, a.point_at(tau)};
  }
  return best;
}

}  // namespace

Point piece_start(const BoundaryPiece& p) {
  if (const auto* s = std::get_if<Segment>(&p)) return s->from;
  const auto& a = std::get<Arc>(p);
  return a.point_at(a.start);
}

Point piece_end(const BoundaryPiece& p) {
  if (const auto* s = std::get_if<Segment>(&p)) return s->to;
  const auto& a = std::get<Arc>(p);
  return a.point_at(a.end);
}

Point piece_midpoint(const BoundaryPiece& p) {
  if (const auto* s = std::get_if<Segment>(&p)) return 0.5 * (s->from + s->to);
  const auto& a = std::get<Arc>(p);
  return a.point_at(0.5 * (a.start + a.end));
}

Point SupportResult::contact_point() const {
  if (const auto* p = std::get_if<Point>(&contact)) return *p;
  const auto& s = std::get<Segment>(contact);
  return 0.5 * (s.from + s.to);
}

Domain::Domain(std::vector<BoundaryPiece> pieces, Options options)
    : pieces_(std::move(pieces)), options_(options), approx_({{1, 0}, {0, 1}, {-1, 1}}) {
  validate();
}

void Domain::validate() {
  const int n = static_cast<int>(pieces_.size());
  if (n == 0) throw ValidationError("NotClosed", "empty piece list");

  double scale = 1.0;
  for (int i = 0; i < n; ++i) {
    const BoundaryPiece& p = pieces_[i];
    if (const auto* a = std::get_if<Arc>(&p)) {
      if (!(a->rx > 0.0) || !(a->ry > 0.0))
        throw ValidationError("InvalidPiece", "arc radii must be positive", i);
      if (!(a->span() > 0.0) || !(a->span() < kTau))
        throw ValidationError("InvalidPiece", "arc span must lie in (0, 2*pi)", i);
      scale = std::max(scale, norm(a->center) + std::max(a->rx, a->ry));
    } else {
      const auto& s = std::get<Segment>(p);
      scale = std::max({scale, norm(s.from), norm(s.to)});
      if (distance(s.from, s.to) <= 1e-12 * scale)
        throw ValidationError("InvalidPiece", "degenerate segment", i);
    }
  }

  for (int i = 0; i < n; ++i) {
    double gap = distance(piece_end(pieces_[i]), piece_start(pieces_[(i + 1) % n]));
    if (gap > options_.closure_tol)
      throw ValidationError("NotClosed",
                            "gap of " + std::to_string(gap) + " after piece " + std::to_string(i),
                            i);
  }

  // Central symmetry: negation is a fixed-point-free cyclic symmetry of the
  // chain, so it must map piece i onto piece i + n/2.
  const double sym_tol = std::max(options_.closure_tol, 1e-9);
  if (n % 2 != 0)
    throw ValidationError("NotSymmetric", "odd number of boundary pieces", 0);
  const int m = n / 2;
  for (int i = 0; i < m; ++i) {
    const BoundaryPiece& p = pieces_[i];
    const BoundaryPiece& q = pieces_[i + m];
    bool ok = pieces_[i].index() == q.index() &&
              distance(piece_start(p), -piece_start(q)) <= sym_tol &&
              distance(piece_end(p), -piece_end(q)) <= sym_tol &&
              distance(piece_midpoint(p), -piece_midpoint(q)) <= sym_tol;
    if (!ok)
      throw ValidationError("NotSymmetric", "piece has no negated counterpart", i);
  }

  circumradius_ = 0.0;
  origin_in_ellipse_.assign(n, false);
  for (int i = 0; i < n; ++i) {
    if (const auto* a = std::get_if<Arc>(&pieces_[i])) {
      circumradius_ = std::max(circumradius_, norm(a->center) + std::max(a->rx, a->ry));
      Point q = rotate(-a->center, -a->rotation);
      double e = (q.x / a->rx) * (q.x / a->rx) + (q.y / a->ry) * (q.y / a->ry);
      origin_in_ellipse_[i] = e < 1.0;
    } else {
      const auto& s = std::get<Segment>(pieces_[i]);
      circumradius_ = std::max({circumradius_, norm(s.from), norm(s.to)});
    }
  }

  start_angles_.resize(n);
  start_angles_[0] = angle_of(piece_start(pieces_[0]));
  for (int i = 1; i < n; ++i) {
    double prev = start_angles_[i - 1];
    start_angles_[i] = prev + normalize_angle(angle_of(piece_start(pieces_[i])) - prev);
  }

  polygonal_ = true;
  for (const BoundaryPiece& p : pieces_)
    if (std::holds_alternative<Arc>(p)) polygonal_ = false;

  ConvexPolygon poly = polygonize(options_.polygonize_n);
  const auto& verts = poly.vertices();
  const std::size_t vn = verts.size();
  const double conv_eps = 1e-9 * scale * scale;
  const double per_piece = static_cast<double>(vn) / n;
  for (std::size_t i = 0; i < vn; ++i) {
    Point a = verts[i], b = verts[(i + 1) % vn], c = verts[(i + 2) % vn];
    if (cross(b - a, c - b) < -conv_eps)
      throw ValidationError("NotConvex", "boundary turns clockwise",
                            static_cast<int>(((i + 1) % vn) / per_piece));
  }
  for (std::size_t i = 0; i < vn; ++i) {
    Point a = verts[i], b = verts[(i + 1) % vn];
    if (cross(b - a, -a) <= 1e-12 * scale * scale)
      throw ValidationError("OriginNotInterior", "origin is not strictly inside",
                            static_cast<int>(i / per_piece));
  }
  approx_ = std::move(poly);
}

std::vector<Point> Domain::corners() const {
  std::vector<Point> c;
  c.reserve(pieces_.size());
  for (const BoundaryPiece& p : pieces_) c.push_back(piece_start(p));
  return c;
}

SupportResult Domain::support(double theta) const {
  Point u = unit_vector(theta);
  double h = -std::numeric_limits<double>::infinity();
  Point best{};
  for (const BoundaryPiece& p : pieces_) {
    PieceSupport s = std::holds_alternative<Segment>(p)
                         ? segment_support(std::get<Segment>(p), u)
                         : arc_support(std::get<Arc>(p), u);
    if (s.value > h) {
      h = s.value;
      best = s.point;
    }
  }
  for (const BoundaryPiece& p : pieces_) {
    const auto* s = std::get_if<Segment>(&p);
    if (!s) continue;
    if (angle_distance(angle_of(segment_outward_normal(*s)), theta) > kEdgeNormalTol) continue;
    if (std::max(dot(s->from, u), dot(s->to, u)) >= h - 1e-12 * (1.0 + circumradius_))
      return {h, *s};
  }
  return {h, best};
}

Chord Domain::chord(double theta, double t) const {
  Point u = unit_vector(theta);
  double h = support(theta).height;
  const double slab_tol = 1e-9 * (1.0 + circumradius_);
  if (t > h + slab_tol || t < -h - slab_tol)
    throw ValidationError("OutOfSlab", "level t is outside [-h(theta), h(theta)]");

  const double eps = 1e-12 * (1.0 + circumradius_);
  struct Hit {
    Point p;
    bool interior;  // strictly within the piece's span (not via tolerance)
  };
  std::vector<Hit> pts;
  for (const BoundaryPiece& p : pieces_) {
    if (const auto* s = std::get_if<Segment>(&p)) {
      double s0 = dot(s->from, u) - t, s1 = dot(s->to, u) - t;
      if (std::abs(s0) <= eps && std::abs(s1) <= eps) {
        pts.push_back({s->from, true});
        pts.push_back({s->to, true});
      } else if (std::abs(s0) <= eps) {
        pts.push_back({s->from, true});
      } else if (std::abs(s1) <= eps) {
        pts.push_back({s->to, true});
      } else if ((s0 < 0) != (s1 < 0)) {
        pts.push_back({s->from + (s0 / (s0 - s1)) * (s->to - s->from), true});
      }
    } else {
      const auto& a = std::get<Arc>(p);
      Point v = rotate(u, -a.rotation);
      double ca = a.rx * v.x, cb = a.ry * v.y;
      double gamma = t - dot(a.center, u);
      double r = std::hypot(ca, cb);
      if (r < std::abs(gamma) - eps) continue;
      double d = std::acos(std::clamp(gamma / r, -1.0, 1.0));
      double phi0 = std::atan2(cb, ca);
      for (double root : {phi0 + d, phi0 - d}) {
        // Evaluate at the true root; a root accepted through the tolerance
        // band still lies exactly on the line.
        double tau = a.start + normalize_angle(root - a.start);
        if (tau <= a.end + 1e-9) {
          pts.push_back({a.point_at(tau), tau <= a.end});
        } else if (tau >= a.start + 2 * kPi - 1e-9) {
          pts.push_back({a.point_at(tau - 2 * kPi), false});
        }
      }
    }
  }

  // Dedupe nearby hits, preferring in-span ones over tolerance-band ones.
  std::vector<Hit> uniq;
  for (const Hit& h : pts) {
    bool dup = false;
    for (Hit& q : uniq)
      if (distance(h.p, q.p) <= 1e-9 * (1.0 + circumradius_)) {
        if (h.interior && !q.interior) q = h;
        dup = true;
        break;
      }
    if (!dup) uniq.push_back(h);
  }

  if (uniq.empty()) {
    Point p = support(t >= 0 ? theta : theta + kPi).contact_point();
    return {p, p, 0.0};
  }
  Point w = perp(u);
  Point hi = uniq[0].p, lo = uniq[0].p;
  double phi = dot(hi, w), plo = phi;
  for (const Hit& h : uniq) {
    double pr = dot(h.p, w);
    if (pr > phi) hi = h.p, phi = pr;
    if (pr < plo) lo = h.p, plo = pr;
  }
  return {hi, lo, phi - plo};
}

double Domain::area() const {
  double acc = 0.0;
  for (const BoundaryPiece& p : pieces_) {
    if (const auto* s = std::get_if<Segment>(&p)) {
      acc += cross(s->from, s->to);
    } else {
      const auto& a = std::get<Arc>(p);
      acc += cross(a.center, piece_end(p) - piece_start(p)) + a.rx * a.ry * a.span();
    }
  }
  return acc / 2.0;
}

ConvexPolygon Domain::polygonize(int n) const {
  const int np = static_cast<int>(pieces_.size());
  const int m = np / 2;
  // Subtended angle at the origin per piece (first half; second half mirrors).
  std::vector<double> w(m);
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    double a0 = angle_of(piece_start(pieces_[i]));
    double a1 = angle_of(piece_end(pieces_[i]));
    w[i] = normalize_angle(a1 - a0);
    total += w[i];
  }
  std::vector<int> counts(m, 1);
  int assigned = m;
  std::vector<std::pair<double, int>> frac(m);
  for (int i = 0; i < m; ++i) {
    double exact = n * w[i] / total;
    int extra = std::max(0, static_cast<int>(std::floor(exact)) - 1);
    counts[i] += extra;
    assigned += extra;
    frac[i] = {exact - std::floor(exact), i};
  }
  std::sort(frac.begin(), frac.end(), [](auto& a, auto& b) {
    return a.first > b.first || (a.first == b.first && a.second < b.second);
  });
  for (int k = 0; assigned < n && k < m; ++k, ++assigned) ++counts[frac[k % m].second];
  while (assigned < n) {
    ++counts[0];
    ++assigned;
  }

  std::vector<Point> verts;
  verts.reserve(2 * assigned);
  for (int i = 0; i < m; ++i) {
    const BoundaryPiece& p = pieces_[i];
    for (int j = 0; j < counts[i]; ++j) {
      double f = static_cast<double>(j) / counts[i];
      if (const auto* s = std::get_if<Segment>(&p))
        verts.push_back(s->from + f * (s->to - s->from));
      else {
        const auto& a = std::get<Arc>(p);
        verts.push_back(a.point_at(a.start + f * a.span()));
      }
    }
  }
  // Mirror so the vertex set is exactly closed under negation.
  const std::size_t half = verts.size();
  for (std::size_t i = 0; i < half; ++i) verts.push_back(-verts[i]);
  return ConvexPolygon(std::move(verts));
}

int Domain::piece_at_angle(double phi) const {
  double base = start_angles_[0];
  double p = base + normalize_angle(phi - base);
  auto it = std::upper_bound(start_angles_.begin(), start_angles_.end(), p);
  return static_cast<int>(std::distance(start_angles_.begin(), it)) - 1;
}

bool Domain::contains(Point p, double slack) const {
  double r = norm(p);
  if (r <= 1e-15) return true;
  if (r > circumradius_ + slack) return false;
  int i = piece_at_angle(angle_of(p));
  const BoundaryPiece& piece = pieces_[i];
  if (const auto* s = std::get_if<Segment>(&piece)) {
    Point d = s->to - s->from;
    return cross(d, p - s->from) >= -slack * norm(d);
  }
  const auto& a = std::get<Arc>(piece);
  if (origin_in_ellipse_[i]) {
    Point q = rotate(p - a.center, -a.rotation);
    double e = (q.x / a.rx) * (q.x / a.rx) + (q.y / a.ry) * (q.y / a.ry);
    return e <= 1.0 + 2.0 * slack / std::min(a.rx, a.ry);
  }
  // Ellipse does not contain the origin: intersect the ray through p with the
  // arc and compare radii.
  Point dir = {p.x / r, p.y / r};
  Point o = rotate(-a.center, -a.rotation);
  Point dd = rotate(dir, -a.rotation);
  o = {o.x / a.rx, o.y / a.ry};
  dd = {dd.x / a.rx, dd.y / a.ry};
  double qa = dot(dd, dd), qb = 2.0 * dot(o, dd), qc = dot(o, o) - 1.0;
  double disc = qb * qb - 4.0 * qa * qc;
  if (disc >= 0.0) {
    double sq = std::sqrt(disc);
    for (double lam : {(-qb - sq) / (2 * qa), (-qb + sq) / (2 * qa)}) {
      if (lam <= 0.0) continue;
      Point f = o + lam * dd;
      double tau = a.start + normalize_angle(std::atan2(f.y, f.x) - a.start);
      if (tau <= a.end + 1e-9) return r <= lam + slack;
    }
  }
  return approx_.contains(p, slack);
}

Domain make_disk(double r) {
  if (!(r > 0)) throw ValidationError("InvalidPiece", "disk radius must be positive");
  return Domain({Arc{{0, 0}, r, r, 0.0, 0.0, kPi}, Arc{{0, 0}, r, r, 0.0, kPi, kTau}});
}

Domain make_ellipse(double a, double b, double phi) {
  if (!(a > 0) || !(b > 0))
    throw ValidationError("InvalidPiece", "ellipse semi-axes must be positive");
  return Domain({Arc{{0, 0}, a, b, phi, 0.0, kPi}, Arc{{0, 0}, a, b, phi, kPi, kTau}});
}

Domain make_parallelogram(Point u, Point v) {
  double scale2 = std::max({1.0, dot(u, u), dot(v, v)});
  if (std::abs(cross(u, v)) <= 1e-12 * scale2)
    throw ValidationError("InvalidPiece", "parallelogram generators must be independent");
  if (cross(u, v) < 0) std::swap(u, v);
  Point w1 = 0.5 * (u + v), w2 = 0.5 * (v - u);
  return Domain({Segment{w1, w2}, Segment{w2, -w1}, Segment{-w1, -w2}, Segment{-w2, w1}});
}

Domain make_regular_polygon(int n, double r) {
  if (n < 4 || n % 2 != 0)
    throw ValidationError("NotSymmetric", "regular polygon needs even n >= 4 for symmetry");
  if (!(r > 0)) throw ValidationError("InvalidPiece", "circumradius must be positive");
  std::vector<BoundaryPiece> pieces;
  pieces.reserve(n);
  for (int k = 0; k < n; ++k) {
    Point a = r * unit_vector(kTau * k / n);
    Point b = r * unit_vector(kTau * (k + 1) / n);
    pieces.push_back(Segment{a, b});
  }
  return Domain(std::move(pieces));
}

Domain linear_image(const Domain& k, double m00, double m01, double m10, double m11) {
  double det = m00 * m11 - m01 * m10;
  if (det <= 0.0)
    throw ValidationError("InvalidLinearMap", "linear image requires positive determinant");
  auto apply = [&](Point p) { return Point{m00 * p.x + m01 * p.y, m10 * p.x + m11 * p.y}; };

  std::vector<BoundaryPiece> out;
  out.reserve(k.pieces().size());
  for (const BoundaryPiece& p : k.pieces()) {
    if (const auto* s = std::get_if<Segment>(&p)) {
      out.push_back(Segment{apply(s->from), apply(s->to)});
      continue;
    }
    const auto& a = std::get<Arc>(p);
    // New ellipse frame N = M * R(rot) * diag(rx, ry), decomposed as
    // R(u) * diag(sx, sy) * R(v) via the closed-form 2x2 SVD, so the arc
    // parameter shifts by +v.
    double cr = std::cos(a.rotation), sr = std::sin(a.rotation);
    double n00 = (m00 * cr + m01 * sr) * a.rx, n01 = (-m00 * sr + m01 * cr) * a.ry;
    double n10 = (m10 * cr + m11 * sr) * a.rx, n11 = (-m10 * sr + m11 * cr) * a.ry;
    double e = (n00 + n11) / 2, f = (n00 - n11) / 2;
    double g = (n10 + n01) / 2, h = (n10 - n01) / 2;
    double q = std::hypot(e, h), rr = std::hypot(f, g);
    double sx = q + rr, sy = q - rr;
    double a1 = std::atan2(g, f), a2 = std::atan2(h, e);
    double theta_u = (a2 + a1) / 2, theta_v = (a2 - a1) / 2;
    out.push_back(Arc{apply(a.center), sx, sy, theta_u, a.start + theta_v, a.end + theta_v});
  }
  Domain::Options opt;
  opt.polygonize_n = k.polygonize_n();
  opt.closure_tol = std::max(1e-9, 1e-12 * (std::abs(m00) + std::abs(m01) + std::abs(m10) +
                                            std::abs(m11)) * k.circumradius());
  return Domain(std::move(out), opt);
}

}  // namespace latcov
