#pragma once

#include <cstdint>
#include <random>

#include "hob/tiling.hpp"

namespace hob {

struct SamplePoint {
  int tile_id = 0;
  HPoint point;
};

// Uniform tile among ranks 1..max_rank, then a random convex combination of
// its chart vertices lifted back to the sheet.
SamplePoint random_tile_point(const Atlas& atlas, int max_rank, std::mt19937_64& rng);

}  // namespace hob
