#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pwl/pwlmap.hpp"

namespace pwl {

struct SvgOptions {
  bool log_radial = false;
  std::size_t samples = 2048;  // at least 64
};

// Standalone SVG 1.1 drawing of G(S^1): the image curve as a closed
// polyline (id "image-curve", in math coordinates inside a y-flipped
// group), axes, and the images of the cone boundary points labelled
// G(P_i). With log_radial each point p keeps its direction and is drawn
// at radius 0.25 + ln(1 + |p|/r_min) / ln(1 + r_max/r_min).
std::string render_svg_text(const PwlMap2& g, const SvgOptions& opts = {});

// Throws Error{IoError}.
void render_svg(const PwlMap2& g, const std::filesystem::path& out, bool log_radial,
                std::size_t samples = 2048);

// The points of the "image-curve" polyline of an SVG made by render_svg.
std::vector<Vec2> read_svg_polyline(std::string_view svg);

}  // namespace pwl
