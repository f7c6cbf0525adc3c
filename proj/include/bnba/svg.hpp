#pragma once

#include <string>
#include <vector>

#include "bnba/profiles.hpp"

namespace bnba {

struct RenderOptions {
  int width = 720;
  int height = 480;
  bool log_x = false;  // base-2 log axis
  std::string title;
  std::string x_label;
  std::string y_label = "fraction of instances";
};

// Self-contained deterministic SVG. Step curves are drawn as one polyline
// per curve; axes, ticks, and the ideal speed-up reference use line/path
// elements. Identical input yields byte-identical output.
std::string render_svg(const std::vector<ProfileCurve>& curves, const RenderOptions& options);
std::string render_svg(const std::vector<SpeedupCurve>& curves, const RenderOptions& options);

}  // namespace bnba
