#include "hob/tiling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <numbers>
#include <set>
#include <sstream>

#include "hob/error.hpp"

namespace hob {

namespace {

constexpr double kCell = 0.25;
constexpr double kAngleSeparation = 1e-9;

// Extended-precision frame. Composing double matrices along a path loses
// about eps * t^2 in position, enough to split one deep tile in two.
struct Frame {
  using L = long double;
  std::array<L, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  Frame operator*(const Frame& o) const {
    Frame r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        L acc = 0;
        for (int k = 0; k < 3; ++k) acc += m[3 * i + k] * o.m[3 * k + j];
        r.m[3 * i + j] = acc;
      }
    }
    return r;
  }

  HPoint operator()(const HPoint& p) const {
    const L x = p.x(), y = p.y(), t = p.t();
    const L ox = m[0] * x + m[1] * y + m[2] * t;
    const L oy = m[3] * x + m[4] * y + m[5] * t;
    // t from the sheet equation keeps the point on the hyperboloid
    const L ot = std::sqrt(1 + ox * ox + oy * oy);
    return HPoint::project({static_cast<double>(ox), static_cast<double>(oy), static_cast<double>(ot)});
  }

  static Frame rotation(L phi) {
    const L c = std::cos(phi), s = std::sin(phi);
    return {{c, -s, 0, s, c, 0, 0, 0, 1}};
  }

  static Frame boost_x(L d) {
    const L c = std::cosh(d), s = std::sinh(d);
    return {{c, 0, s, 0, 1, 0, s, 0, c}};
  }
};

constexpr long double kPiL = std::numbers::pi_v<long double>;

// Frame taking the origin-centered prototype of the other shape onto the
// neighbor across side `edge` of the origin-centered prototype with `sides`
// sides. The neighbor's vertex 0 is the far endpoint of that side, so its
// counterclockwise order starts with (v[edge+1], v[edge]).
Frame neighbor_step(int sides, int edge, long double inradius, int other_sides, long double other_inradius) {
  const long double facing = 2 * kPiL * (edge + 0.5L) / sides;
  return Frame::rotation(facing) * Frame::boost_x(inradius + other_inradius) *
         Frame::rotation(kPiL - kPiL / other_sides);
}

double center_angle(const Tile& t) noexcept { return reduce_angle(std::atan2(t.center.y(), t.center.x())); }

}  // namespace

const char* shape_name(Shape s) noexcept { return s == Shape::MGon ? "M" : "N"; }

const char* type_label_name(TypeLabel t) noexcept {
  switch (t) {
    case TypeLabel::Table: return "table";
    case TypeLabel::Zero: return "zero";
    case TypeLabel::X: return "X";
    case TypeLabel::Y: return "Y";
    case TypeLabel::Z: return "Z";
    case TypeLabel::Unlabeled: return "none";
  }
  return "none";
}

Shape parse_shape(const std::string& s) {
  if (s == "M") return Shape::MGon;
  if (s == "N") return Shape::NGon;
  throw Error(Errc::Parse, "unknown shape '" + s + "'");
}

TypeLabel parse_type_label(const std::string& s) {
  for (TypeLabel t : {TypeLabel::Table, TypeLabel::Zero, TypeLabel::X, TypeLabel::Y, TypeLabel::Z,
                      TypeLabel::Unlabeled}) {
    if (s == type_label_name(t)) return t;
  }
  throw Error(Errc::Parse, "unknown type label '" + s + "'");
}

PointIndex::Key PointIndex::key_of(const Vec3& p) noexcept {
  return {static_cast<std::int64_t>(std::floor(p.x / kCell)), static_cast<std::int64_t>(std::floor(p.y / kCell))};
}

std::optional<int> PointIndex::find(const Vec3& p) const {
  const Key k = key_of(p);
  for (std::int64_t di = -1; di <= 1; ++di) {
    for (std::int64_t dj = -1; dj <= 1; ++dj) {
      auto it = cells_.find(Key{k.i + di, k.j + dj});
      if (it == cells_.end()) continue;
      for (const auto& [q, id] : it->second) {
        if (same_point(p, q, rel_tol_)) return id;
      }
    }
  }
  return std::nullopt;
}

int PointIndex::insert(const Vec3& p, int id) {
  if (auto found = find(p)) return *found;
  cells_[key_of(p)].emplace_back(p, id);
  ++count_;
  return id;
}

const std::vector<int>& Atlas::layer(int k, Shape shape) const {
  auto it = layers_.find(LayerKey{k, shape});
  if (k < 1 || it == layers_.end() || overall_rank(k, shape) > max_rank_) {
    std::ostringstream os;
    os << "layer " << k << " of " << shape_name(shape) << "-gons is beyond the generated depth (max rank "
       << max_rank_ << ")";
    throw Error(Errc::EmptyLayer, os.str());
  }
  return it->second;
}

int Atlas::max_layer(Shape shape) const noexcept { return shape == Shape::NGon ? (max_rank_ + 1) / 2 : max_rank_ / 2; }

std::vector<LayerCount> Atlas::layer_counts() const {
  std::vector<LayerCount> out;
  for (const auto& [key, ids] : layers_) {
    LayerCount lc;
    lc.layer = key;
    lc.count = static_cast<std::int64_t>(ids.size());
    for (int id : ids) {
      switch (tile(id).type) {
        case TypeLabel::Zero: ++lc.types.zero; break;
        case TypeLabel::X: ++lc.types.x; break;
        case TypeLabel::Y: ++lc.types.y; break;
        case TypeLabel::Z: ++lc.types.z; break;
        default: ++lc.types.unlabeled; break;
      }
    }
    out.push_back(lc);
  }
  // rank order: N1, M1, N2, M2, ...
  std::sort(out.begin(), out.end(), [](const LayerCount& a, const LayerCount& b) {
    return Atlas::overall_rank(a.layer.k, a.layer.shape) < Atlas::overall_rank(b.layer.k, b.layer.shape);
  });
  return out;
}

std::int64_t Atlas::rank_count(int rank) const {
  return std::count_if(tiles_.begin(), tiles_.end(), [rank](const Tile& t) { return t.rank == rank; });
}

Atlas build_atlas(int m, int n, int max_rank, const BuildOptions& options) {
  TableGeometry geometry = mn_geometry(m, n);
  if (max_rank < 0 || max_rank > options.rank_cap) {
    std::ostringstream os;
    os << "max_rank " << max_rank << " outside [0, " << options.rank_cap << "]";
    throw Error(Errc::InvalidArgument, os.str());
  }

  Atlas atlas;
  atlas.geometry_ = geometry;
  atlas.max_rank_ = max_rank;

  const int sides[2] = {m, n};
  // cosh r = cos(theta/2) / sin(pi/k) with tan(alpha/2) = cos(pi/m) / cos(pi/n)
  const long double half_alpha = std::atan(std::cos(kPiL / m) / std::cos(kPiL / n));
  const long double half_beta = kPiL / 2 - half_alpha;
  const long double inradius[2] = {std::acosh(std::cos(half_alpha) / std::sin(kPiL / m)),
                                   std::acosh(std::cos(half_beta) / std::sin(kPiL / n))};
  const double circumradius[2] = {geometry.circumradius_m, geometry.circumradius_n};
  const Polygon prototype[2] = {regular_polygon(m, circumradius[0]), regular_polygon(n, circumradius[1])};

  std::vector<Frame> steps[2];
  for (int s = 0; s < 2; ++s) {
    for (int e = 0; e < sides[s]; ++e) {
      steps[s].push_back(neighbor_step(sides[s], e, inradius[s], sides[1 - s], inradius[1 - s]));
    }
  }

  std::vector<Frame> frames;
  std::vector<int> depth;
  auto add_tile = [&](Shape shape, const Frame& frame, int d) {
    if (atlas.tiles_.size() >= options.tile_budget) {
      std::ostringstream os;
      os << "tile budget of " << options.tile_budget << " exceeded building (" << m << "," << n << ") to rank "
         << max_rank;
      throw Error(Errc::CapExceeded, os.str());
    }
    Tile t;
    t.id = static_cast<int>(atlas.tiles_.size());
    t.shape = shape;
    t.center = frame(HPoint::origin());
    for (const HPoint& v : prototype[shape == Shape::NGon].vertices) t.vertices.push_back(frame(v));
    atlas.centers_.insert(t.center.vec(), t.id);
    atlas.tiles_.push_back(std::move(t));
    atlas.adjacency_.emplace_back();
    frames.push_back(frame);
    depth.push_back(d);
    return atlas.tiles_.back().id;
  };

  add_tile(Shape::MGon, Frame{}, 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    if (depth[static_cast<std::size_t>(id)] >= max_rank) continue;
    const int s = atlas.tiles_[static_cast<std::size_t>(id)].shape == Shape::NGon;
    const Shape other = s ? Shape::MGon : Shape::NGon;
    for (const Frame& step : steps[s]) {
      const Frame frame = frames[static_cast<std::size_t>(id)] * step;
      const HPoint center = frame(HPoint::origin());
      int nb;
      if (auto found = atlas.centers_.find(center.vec())) {
        nb = *found;
      } else {
        nb = add_tile(other, frame, depth[static_cast<std::size_t>(id)] + 1);
        queue.push_back(nb);
      }
      auto& a = atlas.adjacency_[static_cast<std::size_t>(id)];
      if (std::find(a.begin(), a.end(), nb) == a.end()) {
        a.push_back(nb);
        atlas.adjacency_[static_cast<std::size_t>(nb)].push_back(id);
      }
    }
  }

  for (auto& a : atlas.adjacency_) std::sort(a.begin(), a.end());
  index_vertices(atlas);
  assign_ranks(atlas);
  classify_types(atlas);
  index_layers(atlas);
  return atlas;
}

Atlas atlas_from_parts(int m, int n, int max_rank, std::vector<Tile> tiles, std::vector<std::vector<int>> adjacency) {
  Atlas atlas;
  atlas.geometry_ = mn_geometry(m, n);
  atlas.max_rank_ = max_rank;
  if (tiles.empty() || adjacency.size() != tiles.size()) {
    throw Error(Errc::Parse, "atlas needs a table tile and one adjacency list per tile");
  }
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (tiles[i].id != static_cast<int>(i)) throw Error(Errc::Parse, "tile ids must be 0..count-1 in order");
    for (int nb : adjacency[i]) {
      if (nb < 0 || static_cast<std::size_t>(nb) >= tiles.size()) throw Error(Errc::Parse, "neighbor id out of range");
    }
  }
  atlas.tiles_ = std::move(tiles);
  atlas.adjacency_ = std::move(adjacency);
  for (const Tile& t : atlas.tiles_) atlas.centers_.insert(t.center.vec(), t.id);
  index_vertices(atlas);
  assign_ranks(atlas);
  classify_types(atlas);
  index_layers(atlas);
  return atlas;
}

void index_vertices(Atlas& atlas) {
  PointIndex index;
  atlas.vertex_tiles_.clear();
  atlas.outer_t_ = 1.0;
  for (Tile& t : atlas.tiles_) {
    t.vertex_ids.clear();
    for (const HPoint& v : t.vertices) {
      const int next = static_cast<int>(atlas.vertex_tiles_.size());
      const int vid = index.insert(v.vec(), next);
      if (vid == next) atlas.vertex_tiles_.emplace_back();
      atlas.vertex_tiles_[static_cast<std::size_t>(vid)].push_back(t.id);
      t.vertex_ids.push_back(vid);
      atlas.outer_t_ = std::max(atlas.outer_t_, v.t());
    }
  }
}

void assign_ranks(Atlas& atlas) {
  for (Tile& t : atlas.tiles_) t.rank = -1;
  std::deque<int> queue{0};
  atlas.tiles_[0].rank = 0;
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    for (int nb : atlas.adjacency_[static_cast<std::size_t>(id)]) {
      Tile& t = atlas.tiles_[static_cast<std::size_t>(nb)];
      if (t.rank < 0) {
        t.rank = atlas.tiles_[static_cast<std::size_t>(id)].rank + 1;
        queue.push_back(nb);
      }
    }
  }
  for (const Tile& t : atlas.tiles_) {
    if (t.rank < 0) throw Error(Errc::Internal, "tile not connected to the table");
  }
}

std::vector<int> parents_of(const Atlas& atlas, int id) {
  const Tile& t = atlas.tile(id);
  std::set<int> parents;
  for (int vid : t.vertex_ids) {
    for (int other : atlas.tiles_at_vertex(vid)) {
      const Tile& o = atlas.tile(other);
      if (o.shape == Shape::NGon && o.rank == t.rank - 2) parents.insert(other);
    }
  }
  return {parents.begin(), parents.end()};
}

void classify_types(Atlas& atlas) {
  const int m = atlas.m();
  for (Tile& t : atlas.tiles_) {
    if (t.rank == 0) {
      t.type = TypeLabel::Table;
    } else if (t.shape != Shape::NGon) {
      t.type = TypeLabel::Unlabeled;
    } else if (t.rank == 1) {
      t.type = TypeLabel::Zero;
    } else {
      const std::size_t count = parents_of(atlas, t.id).size();
      if (count > 2 || (count == 2 && m >= 4)) {
        std::ostringstream os;
        os << "N-gon " << t.id << " at rank " << t.rank << " has " << count << " parents";
        throw Error(Errc::InvalidLabel, os.str());
      }
      t.type = count == 2 ? TypeLabel::X : count == 1 ? TypeLabel::Y : TypeLabel::Z;
    }
  }
}

void index_layers(Atlas& atlas) {
  atlas.layers_.clear();
  atlas.layer_pos_.assign(atlas.tiles_.size(), 0);
  for (const Tile& t : atlas.tiles_) {
    if (t.rank == 0) continue;
    atlas.layers_[Atlas::layer_of_rank(t.rank)].push_back(t.id);
  }
  for (auto& [key, ids] : atlas.layers_) {
    std::vector<std::pair<double, int>> keyed;
    keyed.reserve(ids.size());
    for (int id : ids) keyed.emplace_back(center_angle(atlas.tile(id)), id);
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i + 1 < keyed.size(); ++i) {
      if (keyed[i + 1].first - keyed[i].first < kAngleSeparation) {
        std::ostringstream os;
        os << "tiles " << keyed[i].second << " and " << keyed[i + 1].second << " of " << shape_name(key.shape)
           << "-gon layer " << key.k << " share center angle " << keyed[i].first << " (t = "
           << atlas.tile(keyed[i].second).center.t() << ", " << atlas.tile(keyed[i + 1].second).center.t() << ")";
        throw Error(Errc::Internal, os.str());
      }
    }
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      ids[i] = keyed[i].second;
      atlas.layer_pos_[static_cast<std::size_t>(ids[i])] = i;
    }
  }
}

}  // namespace hob
