#pragma once

#include <string>
#include <vector>

#include "hob/geometry.hpp"
#include "hob/tiling.hpp"

namespace hob {

struct RenderOptions {
  int size_px = 800;
  int web_depth = -1;  // < 0: no web overlay; 0: singular rays only
  int web_samples_per_ray = 64;
  std::vector<HPoint> orbit;  // drawn as a closed polyline when non-empty
};

// Web samples: side continuations on which the inverse map is undefined and
// their images under the map, together with the continuations on which the
// map is undefined and their images under the inverse, up to `depth` steps.
// Each inner vector is a run of points on one geodesic segment. Rays stop
// where t exceeds `max_t`.
std::vector<std::vector<HPoint>> web_samples(const Polygon& table, int depth, int samples_per_ray, double max_t);

// Klein-chart SVG: unit circle, one polygon per tile filled by rank and
// stroked by type, optional web and orbit overlays. Output is a pure function
// of the inputs.
std::string render_svg(const Atlas& atlas, const RenderOptions& options = {});

}  // namespace hob
