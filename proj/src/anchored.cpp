#include "latcov/anchored.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

namespace latcov {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGolden = 0.6180339887498949;  // (sqrt(5)-1)/2

// Deterministic parallel map: f(i) writes only slot i of its output.
template <class F>
void parallel_for(int n, F&& f) {
  unsigned hw = std::thread::hardware_concurrency();
  if (n < 64 || hw < 2) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  unsigned workers = std::min(hw, 16u);
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Golden-section maximization of a unimodal function on [lo, hi], finished
// with one parabolic polish. The polish matters: once function differences
// fall below fp noise the golden bracket drifts off the maximizer by ~1e-8,
// while a parabola fitted at +-1e-5 still sees well-conditioned differences.
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double xtol) {
  double a = lo, b = hi;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
  }
  double x = 0.5 * (a + b);
  double fx = f(x);
  double delta = 1e-5 * (hi - lo);
  if (x - delta > lo && x + delta < hi) {
    double fm = f(x - delta), fp = f(x + delta);
    double denom = fm - 2.0 * fx + fp;
    if (denom < 0.0) {
      double step = 0.5 * delta * (fm - fp) / denom;
      if (std::abs(step) < delta) {
        double xv = x + step;
        double fv = f(xv);
        // The move is below the noise floor of f by construction; accept it
        // unless the parabola model was clearly wrong.
        if (fv >= fx - 1e-11 * (1.0 + std::abs(fx))) return {xv, std::max(fv, fx)};
      }
    }
  }
  return {x, fx};
}

struct InnerMax {
  double t;
  double area;
};

// Exact maximization of f(t) = width(t)*(h-t)/2 for polygonal domains:
// width is piecewise linear with breakpoints at the vertex levels, so f is
// piecewise quadratic and the maximum is found in closed form per interval.
InnerMax polygon_inner_max(const Domain& k, double theta, double h) {
  Point u = unit_vector(theta);
  std::vector<double> levels;
  for (const Point& c : k.corners()) levels.push_back(dot(c, u));
  std::sort(levels.begin(), levels.end());
  const double eps = 1e-12 * (1.0 + k.circumradius());
  std::vector<double> uniq;
  for (double t : levels)
    if (uniq.empty() || t - uniq.back() > eps) uniq.push_back(t);

  InnerMax best{uniq.front(), 0.0};
  std::vector<double> widths(uniq.size());
  for (std::size_t i = 0; i < uniq.size(); ++i) widths[i] = k.chord(theta, uniq[i]).width;

  auto consider = [&](double t, double w) {
    double f = 0.5 * w * (h - t);
    if (f > best.area) best = {t, f};
  };
  consider(uniq.front(), widths.front());
  for (std::size_t i = 0; i + 1 < uniq.size(); ++i) {
    double t0 = uniq[i], t1 = uniq[i + 1];
    double w0 = widths[i], w1 = widths[i + 1];
    double slope = (w1 - w0) / (t1 - t0);
    consider(t1, w1);
    if (slope != 0.0) {
      // Vertex of the quadratic (w0 + slope*(t-t0)) * (h-t) / 2.
      double tv = 0.5 * (h + t0 - w0 / slope);
      if (tv > t0 && tv < t1) consider(tv, w0 + slope * (tv - t0));
    }
  }
  return best;
}

InnerMax curved_inner_max(const Domain& k, double theta, double h) {
  auto f = [&](double t) { return 0.5 * k.chord(theta, t).width * (h - t); };
  double xtol = 1e-12 * (1.0 + h);
  auto [t, val] = golden_max(f, -h, h, xtol);
  double at_lo = f(-h);
  if (at_lo > val) return {-h, at_lo};
  return {t, val};
}

bool triangles_match(const Triangle& a, const Triangle& b, double tol) {
  auto va = a.vertices();
  auto vb = b.vertices();
  std::array<bool, 3> used{false, false, false};
  for (const Point& p : va) {
    bool found = false;
    for (int j = 0; j < 3; ++j) {
      if (!used[j] && distance(p, vb[j]) <= tol) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool same_up_to_sign(const Triangle& a, const Triangle& b, double tol) {
  Triangle neg(-b.a(), -b.b(), -b.c());
  return triangles_match(a, b, tol) || triangles_match(a, neg, tol);
}

struct GridExtrema {
  std::vector<std::pair<double, double>> maxima;  // (theta, value), refined
  std::vector<std::pair<double, double>> minima;
  double grid_max;
  double grid_min;
};

GridExtrema refined_extrema(const Domain& k, const std::vector<double>& thetas,
                            const std::vector<double>& values, bool want_minima) {
  const int n = static_cast<int>(values.size());
  GridExtrema out;
  out.grid_max = *std::max_element(values.begin(), values.end());
  out.grid_min = *std::min_element(values.begin(), values.end());
  const double step = kPi / n;
  // Constant profile: nothing to refine.
  if (out.grid_max - out.grid_min <= 1e-12 * out.grid_max) {
    int i_max = static_cast<int>(std::max_element(values.begin(), values.end()) - values.begin());
    int i_min = static_cast<int>(std::min_element(values.begin(), values.end()) - values.begin());
    out.maxima.push_back({thetas[i_max], values[i_max]});
    out.minima.push_back({thetas[i_min], values[i_min]});
    return out;
  }
  auto area_at = [&](double th) { return anchored_area(k, th); };
  for (int i = 0; i < n; ++i) {
    double prev = values[(i + n - 1) % n];
    double next = values[(i + 1) % n];
    double v = values[i];
    if (v >= prev && v > next) {
      auto [th, val] = golden_max(area_at, thetas[i] - step, thetas[i] + step, 1e-10);
      out.maxima.push_back({th, std::max(val, v)});
    }
    if (want_minima && v <= prev && v < next) {
      auto neg = [&](double th) { return -area_at(th); };
      auto [th, val] = golden_max(neg, thetas[i] - step, thetas[i] + step, 1e-10);
      out.minima.push_back({th, std::min(-val, v)});
    }
  }
  if (out.maxima.empty()) {
    int i = static_cast<int>(std::max_element(values.begin(), values.end()) - values.begin());
    out.maxima.push_back({thetas[i], values[i]});
  }
  if (want_minima && out.minima.empty()) {
    int i = static_cast<int>(std::min_element(values.begin(), values.end()) - values.begin());
    out.minima.push_back({thetas[i], values[i]});
  }
  return out;
}

}  // namespace

AnchoredTriangle anchored_triangle(const Domain& k, double theta) {
  SupportResult sup = k.support(theta);
  const double h = sup.height;
  InnerMax inner =
      k.is_polygonal() ? polygon_inner_max(k, theta, h) : curved_inner_max(k, theta, h);
  Chord base = k.chord(theta, inner.t);
  AnchoredTriangle result;
  result.theta = theta;
  result.apex_contact = sup.contact;
  result.apex = sup.contact_point();
  result.base_y = base.a;
  result.base_z = base.b;
  result.base_height = inner.t;
  result.area = 0.5 * base.width * (h - inner.t);
  return result;
}

double anchored_area(const Domain& k, double theta) {
  SupportResult sup = k.support(theta);
  InnerMax inner = k.is_polygonal() ? polygon_inner_max(k, theta, sup.height)
                                    : curved_inner_max(k, theta, sup.height);
  return inner.area;
}

std::vector<double> area_profile_values(const Domain& k, int n) {
  std::vector<double> values(n);
  parallel_for(n, [&](int i) { values[i] = anchored_area(k, i * kPi / n); });
  return values;
}

AreaProfile area_profile(const Domain& k, int n) {
  if (n < 16) throw ValidationError("InvalidArgument", "profile grid needs n >= 16");
  AreaProfile p;
  p.thetas.resize(n);
  for (int i = 0; i < n; ++i) p.thetas[i] = i * kPi / n;
  p.values = area_profile_values(k, n);
  GridExtrema ex = refined_extrema(k, p.thetas, p.values, false);
  p.a_max = ex.grid_max;
  for (const auto& [th, val] : ex.maxima) p.a_max = std::max(p.a_max, val);
  p.relative_spread = (ex.grid_max - ex.grid_min) / ex.grid_max;
  const double cut = p.a_max * (1.0 - 1e-9);
  if (ex.grid_max - ex.grid_min <= 1e-12 * ex.grid_max) {
    p.argmax_set = p.thetas;  // every angle is maximal
  } else {
    for (const auto& [th, val] : ex.maxima)
      if (val >= cut) p.argmax_set.push_back(std::fmod(normalize_angle(th), kPi));
    std::sort(p.argmax_set.begin(), p.argmax_set.end());
  }
  return p;
}

double max_anchored_area(const Domain& k, int grid_n) {
  std::vector<double> thetas(grid_n);
  for (int i = 0; i < grid_n; ++i) thetas[i] = i * kPi / grid_n;
  std::vector<double> values = area_profile_values(k, grid_n);
  GridExtrema ex = refined_extrema(k, thetas, values, false);
  double a = ex.grid_max;
  for (const auto& [th, val] : ex.maxima) a = std::max(a, val);
  return a;
}

ProfileExtrema profile_extrema(const Domain& k, int n) {
  std::vector<double> thetas(n);
  for (int i = 0; i < n; ++i) thetas[i] = i * kPi / n;
  std::vector<double> values = area_profile_values(k, n);
  GridExtrema ex = refined_extrema(k, thetas, values, true);
  ProfileExtrema out;
  out.a_max = ex.grid_max;
  out.theta_max = thetas[static_cast<int>(
      std::max_element(values.begin(), values.end()) - values.begin())];
  out.a_min = ex.grid_min;
  out.theta_min = thetas[static_cast<int>(
      std::min_element(values.begin(), values.end()) - values.begin())];
  for (const auto& [th, val] : ex.maxima)
    if (val > out.a_max) {
      out.a_max = val;
      out.theta_max = normalize_angle(th);
    }
  for (const auto& [th, val] : ex.minima)
    if (val < out.a_min) {
      out.a_min = val;
      out.theta_min = normalize_angle(th);
    }
  return out;
}

double critical_determinant(const Domain& k) { return 2.0 * max_anchored_area(k); }

Triangle brute_max_triangle(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  if (n < 3) throw ValidationError("EmptyPolygon", "polygon needs at least 3 vertices");
  std::size_t bi = 0, bj = 1, bk = 2;
  double best = -1.0;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      Point e = v[j] - v[i];
      for (std::size_t k = j + 1; k < n; ++k) {
        double a = std::abs(cross(e, v[k] - v[i]));
        if (a > best) {
          best = a;
          bi = i;
          bj = j;
          bk = k;
        }
      }
    }
  }
  return Triangle(v[bi], v[bj], v[bk]);
}

std::array<double, 3> anchor_angles_of(const Triangle& t) {
  auto v = t.vertices();
  std::array<double, 3> angles;
  for (int i = 0; i < 3; ++i) {
    Point a = v[(i + 1) % 3], b = v[(i + 2) % 3];
    Point n = normalized(perp(b - a));
    if (dot(v[i] - a, n) < 0) n = -n;
    angles[i] = angle_of(n);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

std::vector<CriticalTriangle> critical_triangles(const Domain& k, double tol, int grid_n) {
  const double pos_tol = 1e-6;
  std::vector<Triangle> reps;

  if (k.is_polygonal() && k.corners().size() <= 512) {
    // Complete enumeration over corner triples (exact for polygons).
    std::vector<Point> c = k.corners();
    const std::size_t n = c.size();
    double amax = 0.0;
    for (std::size_t i = 0; i + 2 < n; ++i)
      for (std::size_t j = i + 1; j + 1 < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l)
          amax = std::max(amax, triangle_area(c[i], c[j], c[l]));
    const double cut = amax * (1.0 - tol);
    for (std::size_t i = 0; i + 2 < n; ++i)
      for (std::size_t j = i + 1; j + 1 < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l) {
          if (triangle_area(c[i], c[j], c[l]) < cut) continue;
          Triangle t(c[i], c[j], c[l]);
          bool dup = false;
          for (const Triangle& r : reps)
            if (same_up_to_sign(t, r, pos_tol)) {
              dup = true;
              break;
            }
          if (!dup) reps.push_back(t);
        }
  } else {
    // Sample anchored triangles on the angle grid, refined around maxima.
    std::vector<double> thetas(grid_n);
    for (int i = 0; i < grid_n; ++i) thetas[i] = i * kPi / grid_n;
    std::vector<double> values = area_profile_values(k, grid_n);
    GridExtrema ex = refined_extrema(k, thetas, values, false);
    double amax = ex.grid_max;
    for (const auto& [th, val] : ex.maxima) amax = std::max(amax, val);
    const double cut = amax * (1.0 - tol);
    std::vector<double> candidates;
    for (int i = 0; i < grid_n; ++i)
      if (values[i] >= cut) candidates.push_back(thetas[i]);
    for (const auto& [th, val] : ex.maxima)
      if (val >= cut) candidates.push_back(th);
    for (double th : candidates) {
      AnchoredTriangle at = anchored_triangle(k, th);
      if (at.area < cut) continue;
      Triangle t = at.triangle();
      bool dup = false;
      for (const Triangle& r : reps)
        if (same_up_to_sign(t, r, pos_tol)) {
          dup = true;
          break;
        }
      if (!dup) reps.push_back(t);
    }
  }

  std::vector<CriticalTriangle> out;
  out.reserve(reps.size());
  for (const Triangle& t : reps) out.push_back({t, anchor_angles_of(t)});
  return out;
}

}  // namespace latcov
