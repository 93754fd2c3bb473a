#include "hob/billiards.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hob/error.hpp"

namespace hob {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<ChartPoint> chart_vertices(const Polygon& table) {
  std::vector<ChartPoint> out;
  out.reserve(table.vertices.size());
  for (const HPoint& v : table.vertices) out.push_back(chart(v));
  return out;
}

bool inside(const std::vector<ChartPoint>& poly, const ChartPoint& x) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation_value(poly[i], poly[(i + 1) % n], x) <= kWebEps) return false;
  }
  return true;
}

// sign = +1: table on the left of x -> v; sign = -1: on the right.
int support_impl(const std::vector<ChartPoint>& poly, const ChartPoint& x, int sign, bool require_unique) {
  const std::size_t n = poly.size();
  int best = -1;
  double best_margin = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      margin = std::min(margin, sign * orientation_value(x, poly[i], poly[j]));
    }
    if (margin > best_margin) {
      best_margin = margin;
      best = static_cast<int>(i);
    }
  }
  if (best_margin < -kWebEps) {
    // Only possible for points inside or on the table.
    throw Error(Errc::InsideTable, "point is inside the table");
  }
  if (require_unique && best_margin < kWebEps) {
    throw Error(Errc::AmbiguousSupport, "point lies on a side continuation");
  }
  return best;
}

int support_checked(const Polygon& table, const HPoint& x, int sign) {
  const auto poly = chart_vertices(table);
  const ChartPoint cx = chart(x);
  if (inside(poly, cx)) throw Error(Errc::InsideTable, "point is inside the table");
  return support_impl(poly, cx, sign, true);
}

}  // namespace

int support_vertex(const Polygon& table, const HPoint& x) { return support_checked(table, x, +1); }

int support_vertex_inverse(const Polygon& table, const HPoint& x) { return support_checked(table, x, -1); }

HPoint step(const Polygon& table, const HPoint& x) {
  const int v = support_vertex(table, x);
  return half_turn(table.vertices[static_cast<std::size_t>(v)])(x);
}

HPoint step_inverse(const Polygon& table, const HPoint& x) {
  const int v = support_vertex_inverse(table, x);
  return half_turn(table.vertices[static_cast<std::size_t>(v)])(x);
}

OrbitResult orbit(const Polygon& table, const HPoint& x, std::int64_t max_iter) {
  std::vector<Isometry> turns;
  turns.reserve(table.vertices.size());
  for (const HPoint& v : table.vertices) turns.push_back(half_turn(v));
  const auto poly = chart_vertices(table);

  OrbitResult result;
  result.start = x;
  HPoint cur = x;
  for (std::int64_t i = 0; i < max_iter; ++i) {
    const ChartPoint c = chart(cur);
    if (inside(poly, c)) throw Error(Errc::InsideTable, "orbit start is inside the table");
    int v;
    try {
      v = support_impl(poly, c, +1, true);
    } catch (Error& e) {
      std::ostringstream os;
      os << e.what() << " at iterate " << i;
      Error err(e.code(), os.str());
      err.iterate = i;
      throw err;
    }
    result.support_sequence.push_back(v);
    cur = turns[static_cast<std::size_t>(v)](cur);
    result.iterations_used = i + 1;
    if (same_point(cur.vec(), x.vec(), kReturnTol)) {
      result.period = i + 1;
      break;
    }
  }
  return result;
}

int tile_image(const Atlas& atlas, int tile_id) {
  const Tile& src = atlas.tile(tile_id);
  if (src.rank == 0) throw Error(Errc::InvalidArgument, "the table has no image");
  const Polygon& table = atlas.geometry().table;
  const Isometry g = half_turn(table.vertices[static_cast<std::size_t>(support_vertex(table, src.center))]);
  const HPoint c = g(src.center);
  const auto found = atlas.find_tile(c.vec());
  if (!found) {
    std::ostringstream os;
    os << "image of tile " << tile_id << " (rank " << src.rank << ")";
    if (c.t() > atlas.outer_t() * (1.0 + kReturnTol)) {
      throw Error(Errc::ImageOutsideAtlas, os.str() + " lies outside the atlas");
    }
    throw Error(Errc::CenterMismatch, os.str() + " matches no tile center");
  }
  const Tile& dst = atlas.tile(*found);
  if (dst.shape != src.shape || dst.vertices.size() != src.vertices.size()) {
    throw Error(Errc::CenterMismatch, "image tile has a different shape");
  }
  for (const HPoint& v : src.vertices) {
    const Vec3 w = g.apply(v.vec());
    const bool hit = std::any_of(dst.vertices.begin(), dst.vertices.end(),
                                 [&](const HPoint& d) { return same_point(w, d.vec(), kReturnTol); });
    if (!hit) {
      std::ostringstream os;
      os << "vertex set of tile " << tile_id << " does not map onto tile " << *found;
      throw Error(Errc::CenterMismatch, os.str());
    }
  }
  return *found;
}

bool LayerPermutation::transitive() const noexcept { return std::gcd(jump, size) == 1; }

std::int64_t cyclic_jump(std::span<const std::size_t> image_index) {
  const auto size = static_cast<std::int64_t>(image_index.size());
  if (size == 0) throw Error(Errc::NotCyclic, "empty layer");
  const std::int64_t jump = (static_cast<std::int64_t>(image_index[0]) % size + size) % size;
  for (std::int64_t i = 0; i < size; ++i) {
    const std::int64_t d = ((static_cast<std::int64_t>(image_index[static_cast<std::size_t>(i)]) - i) % size + size) % size;
    if (d != jump) {
      std::ostringstream os;
      os << "jump at index " << i << " is " << d << ", expected " << jump;
      throw Error(Errc::NotCyclic, os.str());
    }
  }
  return jump;
}

LayerPermutation layer_permutation(const Atlas& atlas, int k, Shape shape) {
  const auto& ids = atlas.layer(k, shape);
  std::vector<std::size_t> image(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const int dst = tile_image(atlas, ids[i]);
    if (atlas.tile(dst).rank != atlas.tile(ids[i]).rank) {
      throw Error(Errc::NotCyclic, "image tile changed rank");
    }
    image[i] = atlas.layer_position(dst);
  }
  LayerPermutation p;
  p.layer = {k, shape};
  p.size = static_cast<std::int64_t>(ids.size());
  p.jump = cyclic_jump(image);
  return p;
}

double circle_map(const Polygon& table, double theta) {
  const IdealPoint xi(theta);
  const auto poly = chart_vertices(table);
  const int v = support_impl(poly, chart(xi), +1, false);
  const Vec3 w = half_turn(table.vertices[static_cast<std::size_t>(v)]).apply(xi.null_vector());
  return reduce_angle(std::atan2(w.y, w.x));
}

double rotation_number_numeric(const Polygon& table, double theta0, std::int64_t n_iters) {
  if (n_iters < 1) throw Error(Errc::InvalidArgument, "need at least one iterate");
  double theta = reduce_angle(theta0);
  double total = 0.0;
  for (std::int64_t i = 0; i < n_iters; ++i) {
    const double next = circle_map(table, theta);
    total += reduce_angle(next - theta);
    theta = next;
  }
  return total / (kTwoPi * static_cast<double>(n_iters));
}

}  // namespace hob
