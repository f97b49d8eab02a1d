#pragma once

#include <string>

#include "latcov/domain.hpp"

namespace latcov {

struct RenderOptions {
  int triangles = 0;    // draw up to this many critical triangles
  bool lattice = false; // draw critical-lattice translates of the outline
  int size = 1000;      // square viewport edge, px
  double padding = 0.05;
};

// SVG 1.1 document with the exact boundary (elliptical arc path commands),
// rendered deterministically: no timestamps, elements in canonical order.
std::string render_svg(const Domain& k, const RenderOptions& options = {});

}  // namespace latcov
