#pragma once

#include <string>
#include <vector>

#include "desargues/scene.hpp"

namespace desargues {

struct RenderOptions {
  double xmin = -10.0;
  double xmax = 10.0;
  double ymin = -10.0;
  double ymax = 10.0;
  int width = 640;
  int height = 640;
  int grid = 192;  // marching-squares lattice resolution
  std::vector<PencilParam> pencil_members;
  bool mark_intersections = false;
};

// SVG 1.1 drawing of the scene: labelled point markers, viewport-clipped
// lines, conic and pencil-member curves traced by marching squares, and
// optionally the real line/conic intersection points. empty_viewport when
// the viewport or canvas is degenerate.
std::string render_svg(const Scene& scene, const RenderOptions& opt);

}  // namespace desargues
