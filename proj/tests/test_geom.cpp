#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "latcov/domain.hpp"
#include "latcov/geom.hpp"

using namespace latcov;
using namespace latcov::test;

TEST_CASE("triangle area basics") {
  CHECK(triangle_area({0, 0}, {1, 0}, {0, 1}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(triangle_area({0, 0}, {1, 0}, {2, 0}) == 0.0);
}

TEST_CASE("equilateral triangle inscribed in the unit circle") {
  // Coordinate evaluation is the oracle for the closed form 3*sqrt(3)/4.
  Point a = unit_vector(0), b = unit_vector(2 * kPi / 3), c = unit_vector(4 * kPi / 3);
  double area = triangle_area(a, b, c);
  CHECK(area == doctest::Approx(3 * kSqrt3 / 4).epsilon(1e-12));
  CHECK(area == doctest::Approx(1.29903810568).epsilon(1e-10));
}

TEST_CASE("triangle area is permutation invariant") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int it = 0; it < 50; ++it) {
    Point p[3] = {{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
    double base = triangle_area(p[0], p[1], p[2]);
    int idx[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& perm : idx)
      CHECK(triangle_area(p[perm[0]], p[perm[1]], p[perm[2]]) ==
            doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("triangle area scales by |det M| under linear maps") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int it = 0; it < 50; ++it) {
    double m00 = u(rng), m01 = u(rng), m10 = u(rng), m11 = u(rng);
    Point p[3] = {{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
    auto map = [&](Point q) { return Point{m00 * q.x + m01 * q.y, m10 * q.x + m11 * q.y}; };
    double lhs = triangle_area(map(p[0]), map(p[1]), map(p[2]));
    double rhs = std::abs(m00 * m11 - m01 * m10) * triangle_area(p[0], p[1], p[2]);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("triangle canonicalizes to ccw") {
  Triangle t({0, 0}, {0, 1}, {1, 0});  // given clockwise
  CHECK(cross(t.b() - t.a(), t.c() - t.a()) > 0);
  CHECK(t.area() == doctest::Approx(0.5));
}

TEST_CASE("lattice determinant examples") {
  CHECK(Lattice({1, 0}, {0, 1}).determinant() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(Lattice({2, 0}, {1, 1}).determinant() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(Lattice({0, -1}, {1, -1}).determinant() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(Lattice({1, 2}, {2, 4}), ValidationError);
}

TEST_CASE("lattice determinant is unimodular invariant") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int it = 0; it < 40; ++it) {
    Point b1{u(rng), u(rng)}, b2{u(rng), u(rng)};
    if (std::abs(cross(b1, b2)) < 1e-3) continue;
    auto m = random_unimodular(rng);
    Point c1 = {m[0] * b1.x + m[2] * b2.x, m[0] * b1.y + m[2] * b2.y};
    Point c2 = {m[1] * b1.x + m[3] * b2.x, m[1] * b1.y + m[3] * b2.y};
    CHECK(lattice_determinant(Lattice(c1, c2)) ==
          doctest::Approx(lattice_determinant(Lattice(b1, b2))).epsilon(1e-12));
  }
}

TEST_CASE("hausdorff distance on squares") {
  std::vector<Point> sq = {{-.5, -.5}, {.5, -.5}, {.5, .5}, {-.5, .5}};
  ConvexPolygon p(sq);
  CHECK(hausdorff_distance(p, p) == 0.0);
  std::vector<Point> big;
  for (Point v : sq) big.push_back(2.0 * v);
  CHECK(hausdorff_distance(p, ConvexPolygon(big)) ==
        doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));
}

TEST_CASE("hausdorff distance disk vs scaled disk") {
  // Support-function oracle: for scaled copies of a symmetric convex body
  // the distance is the max support-height difference.
  Domain d1 = make_disk(1.0), d2 = make_disk(1.1);
  double oracle = 0.0;
  for (int i = 0; i < 360; ++i) {
    double th = i * kPi / 180;
    oracle = std::max(oracle, d2.support_height(th) - d1.support_height(th));
  }
  CHECK(oracle == doctest::Approx(0.1).epsilon(1e-12));
  double h = hausdorff_distance(d1.polygonize(2048), d2.polygonize(2048));
  CHECK(h == doctest::Approx(0.1).epsilon(1e-3));
}

TEST_CASE("hausdorff distance satisfies the triangle inequality") {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int it = 0; it < 25; ++it) {
    auto random_poly = [&] {
      std::vector<Point> pts;
      for (int i = 0; i < 12; ++i) pts.push_back({u(rng), u(rng)});
      return convex_hull(pts);
    };
    ConvexPolygon p = random_poly(), q = random_poly(), r = random_poly();
    CHECK(hausdorff_distance(p, r) <=
          hausdorff_distance(p, q) + hausdorff_distance(q, r) + 1e-9);
  }
}

TEST_CASE("convex polygon validation") {
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0.9, 0.2}}), ValidationError);
  ConvexPolygon p({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(p.area() == doctest::Approx(1.0));
  CHECK(p.contains({0.5, 0.5}));
  CHECK(!p.contains({1.5, 0.5}));
  CHECK(p.distance_to({2, 0.5}) == doctest::Approx(1.0));
}
