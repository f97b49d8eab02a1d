#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "latcov/covering.hpp"

using namespace latcov;
using namespace latcov::test;

namespace {
Domain unit_square() { return make_parallelogram({1, 0}, {0, 1}); }
const double kDiskDensity = 2 * kPi / std::sqrt(27.0);
}  // namespace

TEST_CASE("lattice from the square's critical triangle") {
  Triangle t({-0.5, -0.5}, {0.5, -0.5}, {-0.5, 0.5});
  Lattice l = lattice_from_triangle(t);
  CHECK(distance(l.basis1(), {0, -1}) < 1e-15);
  CHECK(distance(l.basis2(), {1, -1}) < 1e-15);
  CHECK(l.determinant() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("critical lattice of the disk is hexagonal") {
  Lattice l = critical_lattice(make_disk(1.0));
  CHECK(l.determinant() == doctest::Approx(3 * kSqrt3 / 2).epsilon(1e-9));
  CHECK(norm(l.basis1()) == doctest::Approx(kSqrt3).epsilon(1e-6));
  CHECK(norm(l.basis2()) == doctest::Approx(kSqrt3).epsilon(1e-6));
  double cosangle = dot(l.basis1(), l.basis2()) / (norm(l.basis1()) * norm(l.basis2()));
  CHECK(std::abs(cosangle) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("critical lattice determinant equals twice the max triangle area") {
  for (const Domain& k : {unit_square(), make_disk(1.0), make_regular_polygon(6, 1),
                          make_regular_polygon(10, 1), make_ellipse(2, 1, 0.3)}) {
    Lattice l = critical_lattice(k);
    CHECK(l.determinant() ==
          doctest::Approx(critical_determinant(k)).epsilon(1e-9));
  }
}

TEST_CASE("square tiles with the integer lattice") {
  CoveringReport r = covering_check(unit_square(), Lattice({1, 0}, {0, 1}), 64);
  CHECK(r.uncovered.empty());
  CHECK(r.density == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.sampled_points == 64 * 64);
}

TEST_CASE("disk covering by its critical lattice") {
  Domain d = make_disk(1.0);
  Lattice l = critical_lattice(d);
  CoveringReport r = covering_check(d, l, 128);
  CHECK(r.uncovered.empty());
  CHECK(r.density == doctest::Approx(kDiskDensity).epsilon(1e-4));
  CHECK(r.density == doctest::Approx(1.20920).epsilon(1e-4));
}

TEST_CASE("scaled-up lattice leaves gaps") {
  Domain d = make_disk(1.0);
  Lattice l = critical_lattice(d);
  Lattice scaled(1.05 * l.basis1(), 1.05 * l.basis2());
  CoveringReport r = covering_check(d, scaled, 128);
  CHECK(!r.uncovered.empty());
  // Reported gaps really are uncovered: nearby lattice translates miss them.
  const Point& p = r.uncovered.front();
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j) CHECK(!d.contains(p - scaled.point(i, j), 1e-12));
}

TEST_CASE("covering check validates resolution") {
  CHECK_THROWS_AS(covering_check(unit_square(), Lattice({1, 0}, {0, 1}), 8), ValidationError);
}

TEST_CASE("covering check handles a strongly skewed unimodular basis") {
  // Unimodular image of Z^2 still tiles with the unit square.
  CoveringReport r = covering_check(unit_square(), Lattice({1, 0}, {10, 1}), 32);
  CHECK(r.uncovered.empty());
  CHECK(r.density == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("covering density of every critical lattice stays above one") {
  for (const Domain& k : {unit_square(), make_disk(1.0), make_regular_polygon(6, 1),
                          make_ellipse(2, 1, 0.0)}) {
    double rho = covering_density(k, critical_lattice(k));
    CHECK(rho >= 1.0 - 1e-9);
  }
}

TEST_CASE("hexagon tiles: covering density one") {
  Domain hex = make_regular_polygon(6, 1);
  Lattice l = critical_lattice(hex);
  CHECK(l.determinant() == doctest::Approx(hex.area()).epsilon(1e-9));
  CHECK(covering_density(hex, l) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(covering_check(hex, l, 128).uncovered.empty());
}

TEST_CASE("ellipse covering density matches the disk (affine invariance)") {
  Domain e = make_ellipse(2, 1, 0);
  CHECK(covering_density(e, critical_lattice(e)) ==
        doctest::Approx(kDiskDensity).epsilon(1e-8));
}

TEST_CASE("critical determinant is constant along ellipses of fixed area") {
  double reference = critical_determinant(make_ellipse(2, 1, 0));
  for (const Domain& e : {make_ellipse(1, 2, 0.0), make_ellipse(std::sqrt(2.0), std::sqrt(2.0), 0),
                          make_ellipse(4, 0.5, 1.1)}) {
    CHECK(critical_determinant(e) == doctest::Approx(reference).epsilon(1e-8));
  }
}

TEST_CASE("monotonicity of the critical determinant under inclusion") {
  // disk of radius 1 inside its circumscribed square of side 2
  CHECK(critical_determinant(make_disk(1.0)) <=
        critical_determinant(make_parallelogram({2, 0}, {0, 2})) + 1e-9);
  // hexagon with circumradius 1 inside the unit disk
  CHECK(critical_determinant(make_regular_polygon(6, 1)) <=
        critical_determinant(make_disk(1.0)) + 1e-9);
}

TEST_CASE("covering check of critical lattices across the suite") {
  for (const Domain& k : {unit_square(), make_regular_polygon(6, 1),
                          make_regular_polygon(10, 1), make_ellipse(2, 1, 0.0)}) {
    CHECK(covering_check(k, critical_lattice(k), 128).uncovered.empty());
  }
}
