#pragma once

// Text formats: atlas JSON, count / permutation / orbit / closed-form reports.

#include <string>
#include <vector>

#include "hob/billiards.hpp"
#include "hob/spectral.hpp"
#include "hob/tiling.hpp"

namespace hob {

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& s);

// {m, n, max_rank, tiles: [{id, shape, rank, type, center, vertices,
// neighbors}]}, coordinates with 17 significant digits.
std::string atlas_to_json(const Atlas& atlas);
Atlas atlas_from_json(const std::string& text);

std::string counts_report(const Atlas& atlas, Format format);

// One entry per fully generated layer: {m, n, layer, shape, size, jump}.
std::vector<LayerPermutation> all_layer_permutations(const Atlas& atlas);
std::string permutations_report(const Atlas& atlas, const std::vector<LayerPermutation>& perms, Format format);

// {point: [x, y, t], period, iterations_used}
std::string orbit_report(const OrbitResult& result, Format format);

// {family, m, n, k, q, l, s, p, j, q_printed, p_printed, rho}; CSV has one row
// per k.
std::string closed_forms_report(const std::vector<ClosedFormValues>& rows, double rho, Format format);

struct RotationSummary {
  int m = 0;
  int n = 0;
  double theta0 = 0.0;
  long long iters = 0;
  double numeric = 0.0;
  double closed = 0.0;
};
std::string rotation_report(const RotationSummary& r, Format format);

}  // namespace hob
