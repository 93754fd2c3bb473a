#pragma once

// Geometric generation of the (M,N)-tiling around the table.
//
// The atlas is built without any knowledge of the substitution rules, so the
// counts it produces are an independent check on the recurrences.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hob/geometry.hpp"

namespace hob {

enum class Shape { MGon, NGon };

enum class TypeLabel { Table, Zero, X, Y, Z, Unlabeled };

const char* shape_name(Shape s) noexcept;       // "M" / "N"
const char* type_label_name(TypeLabel t) noexcept;  // "table", "zero", "X", "Y", "Z", "none"
Shape parse_shape(const std::string& s);
TypeLabel parse_type_label(const std::string& s);

struct Tile {
  int id = 0;
  Shape shape = Shape::MGon;
  HPoint center;
  std::vector<HPoint> vertices;  // counterclockwise
  std::vector<int> vertex_ids;   // into Atlas::vertex_count() space
  int rank = 0;
  TypeLabel type = TypeLabel::Unlabeled;
};

// Spatial hash on the (x, y) hyperboloid coordinates. Lookups match within a
// relative tolerance; distinct tiling points are separated by far more than
// one cell.
class PointIndex {
 public:
  explicit PointIndex(double rel_tol = 1e-7) : rel_tol_(rel_tol) {}

  std::optional<int> find(const Vec3& p) const;
  // Returns the existing id, or inserts `id` and returns it.
  int insert(const Vec3& p, int id);
  std::size_t size() const noexcept { return count_; }

 private:
  struct Key {
    std::int64_t i;
    std::int64_t j;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::int64_t>{}(k.i * 0x9E3779B97F4A7C15LL ^ k.j);
    }
  };
  static Key key_of(const Vec3& p) noexcept;

  double rel_tol_;
  std::size_t count_ = 0;
  std::unordered_map<Key, std::vector<std::pair<Vec3, int>>, KeyHash> cells_;
};

struct BuildOptions {
  int rank_cap = 8;
  std::size_t tile_budget = 1'000'000;
};

struct LayerKey {
  int k = 0;
  Shape shape = Shape::NGon;
  auto operator<=>(const LayerKey&) const = default;
};

struct TypeCounts {
  std::int64_t zero = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;
  std::int64_t unlabeled = 0;
};

struct LayerCount {
  LayerKey layer;
  std::int64_t count = 0;
  TypeCounts types;
};

class Atlas {
 public:
  const TableGeometry& geometry() const noexcept { return geometry_; }
  int m() const noexcept { return geometry_.m; }
  int n() const noexcept { return geometry_.n; }
  int max_rank() const noexcept { return max_rank_; }

  const std::vector<Tile>& tiles() const noexcept { return tiles_; }
  const Tile& tile(int id) const { return tiles_.at(static_cast<std::size_t>(id)); }
  const std::vector<int>& neighbors(int id) const { return adjacency_.at(static_cast<std::size_t>(id)); }
  std::size_t vertex_count() const noexcept { return vertex_tiles_.size(); }
  const std::vector<int>& tiles_at_vertex(int vertex_id) const {
    return vertex_tiles_.at(static_cast<std::size_t>(vertex_id));
  }

  // Tile whose center matches p within the point tolerance.
  std::optional<int> find_tile(const Vec3& p) const { return centers_.find(p); }

  // Tile ids of layer k of the given shape, ordered by increasing chart angle
  // of the center. Throws EmptyLayer when k is beyond the generated depth.
  const std::vector<int>& layer(int k, Shape shape) const;
  // Position of a tile in its layer.
  std::size_t layer_position(int id) const { return layer_pos_.at(static_cast<std::size_t>(id)); }

  // Overall rank of the layer: N-gon layer k is rank 2k-1, M-gon layer k is 2k.
  static int overall_rank(int k, Shape shape) noexcept { return shape == Shape::NGon ? 2 * k - 1 : 2 * k; }
  static LayerKey layer_of_rank(int rank) noexcept {
    return {(rank + 1) / 2, rank % 2 == 1 ? Shape::NGon : Shape::MGon};
  }

  // Deepest k for which layer (k, shape) is fully generated.
  int max_layer(Shape shape) const noexcept;

  std::vector<LayerCount> layer_counts() const;
  std::int64_t rank_count(int rank) const;

  // Largest t among generated tile vertices.
  double outer_t() const noexcept { return outer_t_; }

 private:
  friend Atlas build_atlas(int, int, int, const BuildOptions&);
  friend Atlas atlas_from_parts(int, int, int, std::vector<Tile>, std::vector<std::vector<int>>);
  friend void assign_ranks(Atlas&);
  friend void classify_types(Atlas&);
  friend void index_layers(Atlas&);
  friend void index_vertices(Atlas&);

  TableGeometry geometry_;
  int max_rank_ = 0;
  std::vector<Tile> tiles_;
  std::vector<std::vector<int>> adjacency_;
  PointIndex centers_;
  std::vector<std::vector<int>> vertex_tiles_;
  std::map<LayerKey, std::vector<int>> layers_;
  std::vector<std::size_t> layer_pos_;
  double outer_t_ = 1.0;
};

// Generates every tile of rank <= max_rank, then assigns ranks, types and
// layers. Neighbors are produced by erecting the opposite-shape regular
// polygon on each side.
Atlas build_atlas(int m, int n, int max_rank, const BuildOptions& options = {});

// Rebuilds an atlas from stored tiles and adjacency (used by the JSON loader).
// Ranks, types and layers are recomputed.
Atlas atlas_from_parts(int m, int n, int max_rank, std::vector<Tile> tiles,
                       std::vector<std::vector<int>> adjacency);

// Breadth-first side-crossing distance from the table.
void assign_ranks(Atlas& atlas);

// Parent count of each N-gon of rank >= 3: previous-layer N-gons sharing at
// least one vertex. 2 -> X (M = 3 only), 1 -> Y, 0 -> Z. Rank-1 N-gons are
// Zero. Throws InvalidLabel otherwise.
void classify_types(Atlas& atlas);

// Angular ordering of each layer.
void index_layers(Atlas& atlas);

// Identifies shared vertices across tiles.
void index_vertices(Atlas& atlas);

// Parent ids of an N-gon as used by classify_types.
std::vector<int> parents_of(const Atlas& atlas, int id);

}  // namespace hob
