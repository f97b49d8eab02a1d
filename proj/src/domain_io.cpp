#include "latcov/domain_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace latcov {

namespace {

nlohmann::json point_json(Point p) { return nlohmann::json::array({p.x, p.y}); }

Point point_from(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ValidationError("ParseError", "point must be a [x, y] array");
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<double> split_args(const std::string& text) {
  std::vector<double> args;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    std::size_t used = 0;
    double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument(item);
    args.push_back(v);
  }
  return args;
}

}  // namespace

nlohmann::json domain_to_json(const Domain& k) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const BoundaryPiece& p : k.pieces()) {
    if (const auto* s = std::get_if<Segment>(&p)) {
      pieces.push_back({{"segment", {{"from", point_json(s->from)}, {"to", point_json(s->to)}}}});
    } else {
      const auto& a = std::get<Arc>(p);
      pieces.push_back({{"arc",
                         {{"center", point_json(a.center)},
                          {"rx", a.rx},
                          {"ry", a.ry},
                          {"rotation_rad", a.rotation},
                          {"start_rad", a.start},
                          {"end_rad", a.end}}}});
    }
  }
  return {{"pieces", pieces}, {"polygonize_n", k.polygonize_n()}};
}

Domain domain_from_json(const nlohmann::json& j) {
  if (!j.contains("pieces") || !j["pieces"].is_array())
    throw ValidationError("ParseError", "domain file needs a \"pieces\" array");
  std::vector<BoundaryPiece> pieces;
  for (const auto& pj : j["pieces"]) {
    if (pj.contains("segment")) {
      const auto& s = pj["segment"];
      pieces.push_back(Segment{point_from(s.at("from")), point_from(s.at("to"))});
    } else if (pj.contains("arc")) {
      const auto& a = pj["arc"];
      pieces.push_back(Arc{point_from(a.at("center")), a.at("rx").get<double>(),
                           a.at("ry").get<double>(), a.at("rotation_rad").get<double>(),
                           a.at("start_rad").get<double>(), a.at("end_rad").get<double>()});
    } else {
      throw ValidationError("ParseError", "piece must be a segment or an arc");
    }
  }
  Domain::Options opt;
  if (j.contains("polygonize_n")) opt.polygonize_n = j["polygonize_n"].get<int>();
  return Domain(std::move(pieces), opt);
}

Domain parse_shorthand(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ValidationError("ParseError", "expected \"kind:arg[:arg...]\", got \"" + text + "\"");
  std::string kind = text.substr(0, colon);
  std::vector<double> args;
  try {
    args = split_args(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw ValidationError("ParseError", "bad numeric argument in \"" + text + "\"");
  }
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw ValidationError("ParseError",
                            kind + " takes " + std::to_string(n) + " argument(s)");
  };
  if (kind == "disk") {
    need(1);
    return make_disk(args[0]);
  }
  if (kind == "ellipse") {
    need(3);
    return make_ellipse(args[0], args[1], args[2]);
  }
  if (kind == "ngon") {
    need(2);
    return make_regular_polygon(static_cast<int>(std::lround(args[0])), args[1]);
  }
  if (kind == "par") {
    need(4);
    return make_parallelogram({args[0], args[1]}, {args[2], args[3]});
  }
  if (kind == "square") {
    need(1);
    return make_parallelogram({args[0], 0.0}, {0.0, args[0]});
  }
  throw ValidationError("ParseError", "unknown domain kind \"" + kind + "\"");
}

Domain load_domain(const std::string& path_or_shorthand) {
  if (std::filesystem::exists(path_or_shorthand)) {
    std::ifstream in(path_or_shorthand);
    if (!in) throw ValidationError("ParseError", "cannot open " + path_or_shorthand);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("ParseError", std::string("invalid JSON: ") + e.what());
    }
    return domain_from_json(j);
  }
  return parse_shorthand(path_or_shorthand);
}

}  // namespace latcov
