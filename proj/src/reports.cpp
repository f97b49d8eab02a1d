#include "latcov/reports.hpp"

#include <cstdio>

namespace latcov {

namespace {
std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace

std::string profile_csv(const AreaProfile& profile) {
  std::string csv = "theta_rad,area\n";
  for (std::size_t i = 0; i < profile.thetas.size(); ++i)
    csv += format_double(profile.thetas[i]) + "," + format_double(profile.values[i]) + "\n";
  return csv;
}

nlohmann::ordered_json analyze_report(const Domain& k, int n, double tol) {
  InextensibilityVerdict v = inextensibility_verdict(k, n, tol);
  SasResult sas = sas_check(k);
  return nlohmann::ordered_json{{"area", k.area()},
                                {"delta", 2.0 * v.a_max},
                                {"a_max", v.a_max},
                                {"inextensible", v.inextensible},
                                {"spread", v.relative_spread},
                                {"sas_ratio", sas.ratio}};
}

nlohmann::ordered_json lattice_report(const Domain& k, const Lattice& l) {
  return nlohmann::ordered_json{
      {"basis", {{l.basis1().x, l.basis1().y}, {l.basis2().x, l.basis2().y}}},
      {"determinant", l.determinant()},
      {"density", covering_density(k, l)}};
}

nlohmann::ordered_json covering_report_json(const CoveringReport& report) {
  nlohmann::ordered_json uncovered = nlohmann::ordered_json::array();
  for (const Point& p : report.uncovered) uncovered.push_back({p.x, p.y});
  return nlohmann::ordered_json{
      {"lattice",
       {{"basis",
         {{report.lattice.basis1().x, report.lattice.basis1().y},
          {report.lattice.basis2().x, report.lattice.basis2().y}}},
        {"determinant", report.lattice.determinant()}}},
      {"sampled_points", report.sampled_points},
      {"uncovered", uncovered},
      {"density", report.density}};
}

nlohmann::ordered_json family_params_json(const FamilyParams& p) {
  return nlohmann::ordered_json{
      {"s", p.s}, {"a", p.a}, {"T", p.trim}, {"X", p.x_cut}, {"Y", p.y_cut}};
}

}  // namespace latcov
