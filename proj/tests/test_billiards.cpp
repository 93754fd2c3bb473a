#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "hob/billiards.hpp"
#include "hob/error.hpp"
#include "hob/sampling.hpp"
#include "hob/tiling.hpp"

using namespace hob;

namespace {

constexpr double kPi = std::numbers::pi;

// Oracle: the support vertex is the one whose chart direction from x is
// angularly extreme on the clockwise side; every other vertex then lies
// counterclockwise of it as seen from x.
int support_by_angles(const Polygon& table, const HPoint& x) {
  const ChartPoint c = chart(x);
  std::vector<double> ang;
  for (const HPoint& v : table.vertices) {
    const ChartPoint p = chart(v);
    ang.push_back(std::atan2(p.v - c.v, p.u - c.u));
  }
  // rotate angles so the direction to the table center is 0
  const ChartPoint o = chart(table.center);
  const double ref = std::atan2(o.v - c.v, o.u - c.u);
  int best = -1;
  double best_val = 1e9;
  for (std::size_t i = 0; i < ang.size(); ++i) {
    double d = std::remainder(ang[i] - ref, 2 * kPi);
    if (d < best_val) {
      best_val = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("support vertex matches the angular oracle") {
  const TableGeometry g = mn_geometry(4, 5);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  std::uniform_real_distribution<double> rad(g.circumradius_m + 0.05, 6.0);
  int compared = 0;
  for (int i = 0; i < 5000; ++i) {
    const HPoint x = HPoint::polar(rad(rng), ang(rng));
    try {
      CHECK(support_vertex(g.table, x) == support_by_angles(g.table, x));
      ++compared;
    } catch (const Error& e) {
      CHECK(e.code() == Errc::AmbiguousSupport);
    }
  }
  CHECK(compared > 4900);
}

TEST_CASE("frozen support example") {
  // (4,5): the rank-1 tile whose center sits at 45 degrees uses vertex 1.
  const Atlas a = build_atlas(4, 5, 1);
  int found = -1;
  for (int id : a.layer(1, Shape::NGon)) {
    const Tile& t = a.tile(id);
    const double deg = std::atan2(t.center.y(), t.center.x()) * 180.0 / kPi;
    if (std::abs(deg - 45.0) < 1e-6) found = id;
  }
  REQUIRE(found >= 0);
  CHECK(support_vertex(a.geometry().table, a.tile(found).center) == 1);
}

TEST_CASE("support errors") {
  const TableGeometry g = mn_geometry(3, 7);
  CHECK_THROWS_AS(support_vertex(g.table, HPoint::origin()), Error);
  try {
    support_vertex(g.table, HPoint::origin());
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InsideTable);
  }
  // a point on the continuation of side (v1, v0) beyond v0
  const HPoint v0 = g.table.vertices[0];
  const HPoint v1 = g.table.vertices[1];
  const Vec3 dir = v0.vec() - v1.vec();
  const HPoint on_web = HPoint::project(v0.vec() + 0.5 * dir);
  try {
    support_vertex(g.table, on_web);
    FAIL("expected AmbiguousSupport");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AmbiguousSupport);
  }
}

TEST_CASE("step and inverse") {
  const TableGeometry g = mn_geometry(3, 7);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  std::uniform_real_distribution<double> rad(g.circumradius_m + 0.1, 5.0);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const HPoint x = HPoint::polar(rad(rng), ang(rng));
    try {
      const HPoint y = step(g.table, x);
      CHECK(distance(step_inverse(g.table, y), x) < 1e-9);
      ++checked;
    } catch (const Error&) {
    }
  }
  CHECK(checked > 1900);
}

TEST_CASE("layer permutations") {
  const Atlas a = build_atlas(3, 7, 7);
  const std::vector<std::int64_t> expected{1, 6, 5, 19, 14, 51, 37};
  for (int rank = 1; rank <= 7; ++rank) {
    const LayerKey key = Atlas::layer_of_rank(rank);
    const auto p = layer_permutation(a, key.k, key.shape);
    CHECK(p.jump == expected[static_cast<std::size_t>(rank - 1)]);
  }
  const Atlas b = build_atlas(4, 5, 6);
  const std::vector<std::int64_t> expected45{1, 4, 7, 17, 27, 64};
  for (int rank = 1; rank <= 6; ++rank) {
    const LayerKey key = Atlas::layer_of_rank(rank);
    CHECK(layer_permutation(b, key.k, key.shape).jump == expected45[static_cast<std::size_t>(rank - 1)]);
  }
}

TEST_CASE("non-transitive layer is reported, not rejected") {
  const Atlas a = build_atlas(7, 3, 4);
  const auto p = layer_permutation(a, 2, Shape::MGon);
  CHECK(p.jump == 7);
  CHECK(p.size == 21);
  CHECK_FALSE(p.transitive());
}

TEST_CASE("cyclic_jump negative control") {
  std::vector<std::size_t> shift{2, 3, 4, 0, 1};
  CHECK(cyclic_jump(shift) == 2);
  std::vector<std::size_t> broken = shift;
  std::swap(broken[1], broken[2]);
  try {
    cyclic_jump(broken);
    FAIL("expected NotCyclic");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCyclic);
  }
}

TEST_CASE("tile image preserves rank") {
  const Atlas a = build_atlas(4, 5, 5);
  for (const Tile& t : a.tiles()) {
    if (t.rank == 0) continue;
    const Tile& img = a.tile(tile_image(a, t.id));
    CHECK(img.rank == t.rank);
    CHECK(img.shape == t.shape);
  }
  CHECK_THROWS_AS(tile_image(a, 0), Error);
}

TEST_CASE("orbits close") {
  const Atlas a = build_atlas(3, 7, 4);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const SamplePoint s = random_tile_point(a, 4, rng);
    const OrbitResult o = orbit(a.geometry().table, s.point, 100000);
    REQUIRE(o.period.has_value());
    CHECK(o.support_sequence.size() == static_cast<std::size_t>(*o.period));
  }
  // the table's vertices are web points of every orbit through them
  const HPoint v0 = a.geometry().table.vertices[0];
  CHECK_THROWS_AS(orbit(a.geometry().table, v0, 10), Error);
}

TEST_CASE("orbit web hit reports the iterate") {
  const TableGeometry g = mn_geometry(3, 7);
  const HPoint v0 = g.table.vertices[0];
  const HPoint v1 = g.table.vertices[1];
  const HPoint on_web = HPoint::project(v0.vec() + 0.5 * (v0.vec() - v1.vec()));
  try {
    orbit(g.table, on_web, 10);
    FAIL("expected AmbiguousSupport");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AmbiguousSupport);
    REQUIRE(e.iterate.has_value());
    CHECK(*e.iterate == 0);
  }
}

TEST_CASE("circle map and rotation number") {
  const TableGeometry g = mn_geometry(4, 5);
  CHECK(rotation_number_numeric(g.table, 0.1, 100000) == doctest::Approx(0.355662).epsilon(1e-3));
  const TableGeometry h = mn_geometry(3, 7);
  CHECK(rotation_number_numeric(h.table, 0.1, 100000) == doctest::Approx(0.425464).epsilon(1e-3));
  // the boundary map moves counterclockwise by less than half a turn
  const double t0 = 1.0;
  const double t1 = circle_map(g.table, t0);
  const double d = std::remainder(t1 - t0, 2 * kPi);
  CHECK(d > 0.0);
  CHECK(d < kPi);
}

TEST_CASE("random sample points lie in their tile") {
  const Atlas a = build_atlas(5, 6, 4);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const SamplePoint s = random_tile_point(a, 4, rng);
    const Tile& t = a.tile(s.tile_id);
    CHECK(t.rank >= 1);
    CHECK(t.rank <= 4);
    const ChartPoint p = chart(s.point);
    for (std::size_t k = 0; k < t.vertices.size(); ++k) {
      CHECK(orientation_value(chart(t.vertices[k]), chart(t.vertices[(k + 1) % t.vertices.size()]), p) > 0.0);
    }
  }
}
