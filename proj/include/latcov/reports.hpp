#pragma once

#include <string>

#include "json.hpp"
#include "latcov/analysis.hpp"
#include "latcov/covering.hpp"
#include "latcov/family.hpp"

namespace latcov {

// CSV profile: header "theta_rad,area", LF endings, 17 significant digits
// (enough for bitwise double round trips).
std::string profile_csv(const AreaProfile& profile);

nlohmann::ordered_json analyze_report(const Domain& k, int n = 360, double tol = 1e-6);
nlohmann::ordered_json lattice_report(const Domain& k, const Lattice& l);
nlohmann::ordered_json covering_report_json(const CoveringReport& report);
nlohmann::ordered_json family_params_json(const FamilyParams& p);

}  // namespace latcov
