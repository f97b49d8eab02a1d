#pragma once

#include <string>

#include "json.hpp"
#include "latcov/domain.hpp"

namespace latcov {

// Domain file format:
//   {"pieces":[{"segment":{"from":[x,y],"to":[x,y]}} |
//              {"arc":{"center":[x,y],"rx":r,"ry":r,"rotation_rad":t,
//                      "start_rad":a,"end_rad":b}}],
//    "polygonize_n": N}
nlohmann::json domain_to_json(const Domain& k);
Domain domain_from_json(const nlohmann::json& j);

// Named-domain shorthand: "disk:R", "ellipse:A:B:PHI", "ngon:N:R",
// "par:UX:UY:VX:VY", "square:SIDE".
Domain parse_shorthand(const std::string& text);

// Existing files take precedence over shorthand strings.
Domain load_domain(const std::string& path_or_shorthand);

}  // namespace latcov
