#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "latcov/domain_io.hpp"
#include "latcov/family.hpp"
#include "latcov/reports.hpp"
#include "latcov/svg.hpp"

using namespace latcov;
using namespace latcov::test;

TEST_CASE("domain JSON round trip") {
  Domain k = build_family_domain(solve_family(0.05));
  nlohmann::json j = domain_to_json(k);
  Domain back = domain_from_json(j);
  REQUIRE(back.pieces().size() == k.pieces().size());
  CHECK(back.area() == doctest::Approx(k.area()).epsilon(1e-15));
  for (double th : {0.0, 0.7, 1.9, 2.6})
    CHECK(back.support_height(th) == doctest::Approx(k.support_height(th)).epsilon(1e-15));
  CHECK(j.contains("polygonize_n"));
  CHECK(j["pieces"].size() == k.pieces().size());
  // Serializing to text and back reproduces the doubles exactly.
  nlohmann::json reparsed = nlohmann::json::parse(j.dump());
  Domain back2 = domain_from_json(reparsed);
  const auto& a0 = std::get<Arc>(k.pieces()[1]);
  const auto& a1 = std::get<Arc>(back2.pieces()[1]);
  CHECK(a0.rx == a1.rx);
  CHECK(a0.start == a1.start);
  CHECK(a0.center.x == a1.center.x);
}

TEST_CASE("domain JSON rejects malformed input") {
  CHECK_THROWS_WITH_AS(domain_from_json(nlohmann::json{{"foo", 1}}),
                       doctest::Contains("ParseError"), ValidationError);
  nlohmann::json bad = {{"pieces", {{{"blob", 1}}}}};
  CHECK_THROWS_WITH_AS(domain_from_json(bad), doctest::Contains("ParseError"), ValidationError);
}

TEST_CASE("shorthand parsing") {
  CHECK(parse_shorthand("disk:1").area() == doctest::Approx(kPi));
  CHECK(parse_shorthand("ellipse:2:1:0").area() == doctest::Approx(2 * kPi));
  CHECK(parse_shorthand("ngon:6:1").pieces().size() == 6);
  CHECK(parse_shorthand("par:1:0:0:1").area() == doctest::Approx(1.0));
  CHECK(parse_shorthand("square:2").area() == doctest::Approx(4.0));
  CHECK_THROWS_WITH_AS(parse_shorthand("blob:1"), doctest::Contains("ParseError"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_shorthand("disk:abc"), doctest::Contains("ParseError"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_shorthand("disk:1:2"), doctest::Contains("ParseError"),
                       ValidationError);
}

TEST_CASE("profile CSV round-trips bitwise") {
  AreaProfile p = area_profile(make_regular_polygon(6, 1), 64);
  std::string csv = profile_csv(p);
  CHECK(csv.rfind("theta_rad,area\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  for (int i = 0; i < 64; ++i) {
    REQUIRE(std::getline(in, line));
    auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    double theta = std::strtod(line.substr(0, comma).c_str(), nullptr);
    double value = std::strtod(line.substr(comma + 1).c_str(), nullptr);
    CHECK(theta == p.thetas[i]);  // bitwise
    CHECK(value == p.values[i]);
  }
  CHECK(!std::getline(in, line));
}

TEST_CASE("hexagon profile CSV hits the documented extremes") {
  AreaProfile p = area_profile(make_regular_polygon(6, 1), 360);
  std::string csv = profile_csv(p);
  double lo = 1e9, hi = -1e9;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    double v = std::strtod(line.substr(line.find(',') + 1).c_str(), nullptr);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(lo == doctest::Approx(0.974279).epsilon(1e-6));
  CHECK(hi == doctest::Approx(1.299038).epsilon(1e-6));
}

TEST_CASE("reports are deterministic") {
  Domain k = make_regular_polygon(6, 1);
  CHECK(analyze_report(k).dump(2) == analyze_report(k).dump(2));
  CHECK(profile_csv(area_profile(k, 64)) == profile_csv(area_profile(k, 64)));
  Lattice l = critical_lattice(k);
  CHECK(lattice_report(k, l).dump(2) == lattice_report(k, l).dump(2));
  CHECK(covering_report_json(covering_check(k, l, 32)).dump() ==
        covering_report_json(covering_check(k, l, 32)).dump());
  RenderOptions opt;
  opt.triangles = 1;
  CHECK(render_svg(k, opt) == render_svg(k, opt));
}

TEST_CASE("analyze report fields") {
  auto j = analyze_report(make_disk(1.0));
  CHECK(j["area"].get<double>() == doctest::Approx(kPi));
  CHECK(j["delta"].get<double>() == doctest::Approx(2.598076).epsilon(1e-6));
  CHECK(j["inextensible"].get<bool>());
  CHECK(j["sas_ratio"].get<double>() == doctest::Approx(3 * kSqrt3 / (4 * kPi)).epsilon(1e-9));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"area", "delta", "a_max", "inextensible", "spread",
                                         "sas_ratio"});
}

TEST_CASE("family params JSON uses the construction's field names") {
  auto j = family_params_json(FamilyParams{0.1, 0.2, 0.3, 0.4, 0.5});
  CHECK(j["s"].get<double>() == 0.1);
  CHECK(j["a"].get<double>() == 0.2);
  CHECK(j["T"].get<double>() == 0.3);
  CHECK(j["X"].get<double>() == 0.4);
  CHECK(j["Y"].get<double>() == 0.5);
}

namespace {

struct SvgArc {
  double x1, y1, rx, ry, phi_deg, large, sweep, x2, y2;
};

// Current point plus every elliptical-arc command of the first path.
std::vector<SvgArc> parse_first_path_arcs(const std::string& svg) {
  auto d0 = svg.find("d=\"");
  auto d1 = svg.find('"', d0 + 3);
  std::istringstream in(svg.substr(d0 + 3, d1 - d0 - 3));
  std::vector<SvgArc> arcs;
  double cx = 0, cy = 0;
  std::string tok;
  while (in >> tok) {
    if (tok == "M" || tok == "L") {
      in >> cx >> cy;
    } else if (tok == "A") {
      SvgArc a{};
      a.x1 = cx;
      a.y1 = cy;
      in >> a.rx >> a.ry >> a.phi_deg >> a.large >> a.sweep >> a.x2 >> a.y2;
      arcs.push_back(a);
      cx = a.x2;
      cy = a.y2;
    }
  }
  return arcs;
}

// SVG 1.1 endpoint-to-center conversion (spec section F.6.5); returns the
// point halfway along the drawn arc.
Point svg_arc_midpoint(const SvgArc& a) {
  double phi = a.phi_deg * kPi / 180.0;
  Point h = {(a.x1 - a.x2) / 2, (a.y1 - a.y2) / 2};
  Point p1 = rotate(h, -phi);
  double rx = a.rx, ry = a.ry;
  double num = rx * rx * ry * ry - rx * rx * p1.y * p1.y - ry * ry * p1.x * p1.x;
  double den = rx * rx * p1.y * p1.y + ry * ry * p1.x * p1.x;
  double coef = std::sqrt(std::max(0.0, num / den));
  if (a.large == a.sweep) coef = -coef;
  Point cp = {coef * rx * p1.y / ry, -coef * ry * p1.x / rx};
  Point center = rotate(cp, phi) + Point{(a.x1 + a.x2) / 2, (a.y1 + a.y2) / 2};
  auto angle = [&](Point v) { return std::atan2(v.y / ry, v.x / rx); };
  double th1 = angle({p1.x - cp.x, p1.y - cp.y});
  double th2 = angle({-p1.x - cp.x, -p1.y - cp.y});
  double dth = th2 - th1;
  if (a.sweep == 0 && dth > 0) dth -= 2 * kPi;
  if (a.sweep == 1 && dth < 0) dth += 2 * kPi;
  double tm = th1 + dth / 2;
  return center + rotate({rx * std::cos(tm), ry * std::sin(tm)}, phi);
}

}  // namespace

TEST_CASE("SVG arcs trace the true boundary") {
  // Re-derive the renderer's world-to-viewport mapping from the bbox rule
  // and check each arc command's midpoint against the exact boundary.
  for (const Domain& k : {make_ellipse(2, 1, 0.4), make_disk(1.0),
                          build_family_domain(solve_family(0.05))}) {
    std::string svg = render_svg(k);
    double lox = 0, hix = 0, loy = 0, hiy = 0;
    for (const Point& v : k.approximation().vertices()) {
      lox = std::min(lox, v.x);
      hix = std::max(hix, v.x);
      loy = std::min(loy, v.y);
      hiy = std::max(hiy, v.y);
    }
    double scale = 1000 * 0.9 / std::max(hix - lox, hiy - loy);
    double ox = 500 - scale * (lox + hix) / 2, oy = 500 + scale * (loy + hiy) / 2;
    auto to_view = [&](Point p) { return Point{ox + scale * p.x, oy - scale * p.y}; };

    std::vector<SvgArc> arcs = parse_first_path_arcs(svg);
    std::vector<Point> expected;
    for (const BoundaryPiece& p : k.pieces())
      if (std::holds_alternative<Arc>(p)) expected.push_back(to_view(piece_midpoint(p)));
    REQUIRE(arcs.size() == expected.size());
    for (std::size_t i = 0; i < arcs.size(); ++i)
      CHECK(distance(svg_arc_midpoint(arcs[i]), expected[i]) < 0.1);  // px
  }
}

TEST_CASE("SVG output shape") {
  RenderOptions opt;
  opt.triangles = 2;
  opt.lattice = true;
  std::string svg = render_svg(make_disk(1.0), opt);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
  CHECK(svg.find(" A ") != std::string::npos);       // exact elliptic arcs
  CHECK(svg.find("<polygon") != std::string::npos);  // critical triangles
  CHECK(svg.find("</svg>") != std::string::npos);
  std::string plain = render_svg(make_regular_polygon(6, 1));
  CHECK(plain.find(" L ") != std::string::npos);
  CHECK(plain.find("<polygon") == std::string::npos);
}
