#pragma once

// Outer billiard map about the table and the dynamics it induces on tiles and
// on the circle at infinity.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hob/geometry.hpp"
#include "hob/tiling.hpp"

namespace hob {

// A point is on a side continuation when its orientation determinant against
// the two endpoints is below this in absolute value.
inline constexpr double kWebEps = 1e-9;

// Tolerance for first-return and tile matching.
inline constexpr double kReturnTol = 1e-7;

// Vertex v of the table with every other vertex weakly left of the chart ray
// x -> v (the table is on the left as seen from x). Throws InsideTable or
// AmbiguousSupport.
int support_vertex(const Polygon& table, const HPoint& x);

// Mirrored convention: every other vertex weakly right of x -> v.
int support_vertex_inverse(const Polygon& table, const HPoint& x);

HPoint step(const Polygon& table, const HPoint& x);
HPoint step_inverse(const Polygon& table, const HPoint& x);

struct OrbitResult {
  HPoint start;
  std::optional<std::int64_t> period;
  std::int64_t iterations_used = 0;
  std::vector<int> support_sequence;
};

// Iterates until the orbit returns to the start (relative tolerance
// kReturnTol) or max_iter steps are used. A web hit throws AmbiguousSupport
// with Error::iterate set.
OrbitResult orbit(const Polygon& table, const HPoint& x, std::int64_t max_iter);

// Image tile under the billiard map. The full vertex set is checked against
// the isometry image.
int tile_image(const Atlas& atlas, int tile_id);

struct LayerPermutation {
  LayerKey layer;
  std::int64_t size = 0;
  std::int64_t jump = 0;

  bool transitive() const noexcept;  // gcd(jump, size) == 1
};

// Jump of i -> image_index[i], or NotCyclic when it is not constant.
std::int64_t cyclic_jump(std::span<const std::size_t> image_index);

LayerPermutation layer_permutation(const Atlas& atlas, int k, Shape shape);

// The billiard map extended to the boundary circle.
double circle_map(const Polygon& table, double theta);

// Birkhoff average of the lift displacement (t(theta) - theta) mod 2pi over
// n_iters iterates, in turns.
double rotation_number_numeric(const Polygon& table, double theta0, std::int64_t n_iters);

}  // namespace hob
