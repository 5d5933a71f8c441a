#pragma once

#include <map>
#include <optional>
#include <string>

#include "recross/hulls.hpp"

namespace recross {

// Rendering is a pure function of the drawing, the colouring and these
// settings, so equal inputs give byte-identical SVG.  All layout arithmetic
// is exact; coordinates are printed with six decimal places.
struct RenderSpec {
  int canvas = 800;
  int margin = 40;
  bool crossing_dots = true;
  // Overrides for vertex colours; empty entries fall back to the default
  // palette (red/green/blue/white as the names say).
  std::map<Color, std::string> palette;
};

std::string render_svg(const Drawing& d,
                       const std::optional<std::vector<Color>>& colors,
                       const RenderSpec& spec = {});

// Colours by hull peel when the shape supports it, otherwise renders
// uncoloured.
std::string render_colored_svg(const Drawing& d, const RenderSpec& spec = {});

}  // namespace recross
