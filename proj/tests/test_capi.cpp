#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "hob/hob.h"

namespace {

// Takes ownership of a library-allocated string.
std::string take(char* s) {
  std::string out = s ? s : "";
  hob_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("build and query an atlas") {
  hob_atlas* a = nullptr;
  REQUIRE(hob_atlas_build(3, 7, 5, 0, &a) == HOB_OK);
  size_t tiles = 0;
  CHECK(hob_atlas_tile_count(a, &tiles) == HOB_OK);
  CHECK(tiles == 1 + 3 + 15 + 12 + 45 + 33);
  size_t layer = 0;
  CHECK(hob_atlas_layer_size(a, 3, HOB_SHAPE_N, &layer) == HOB_OK);
  CHECK(layer == 33);
  CHECK(hob_atlas_layer_size(a, 4, HOB_SHAPE_N, &layer) == HOB_E_EMPTY_LAYER);

  int64_t size = 0, jump = 0;
  CHECK(hob_layer_permutation(a, 2, HOB_SHAPE_N, &size, &jump) == HOB_OK);
  CHECK(size == 12);
  CHECK(jump == 5);

  char* csv = nullptr;
  CHECK(hob_counts_report(a, HOB_FORMAT_CSV, &csv) == HOB_OK);
  CHECK(take(csv).rfind("layer,shape,rank,count", 0) == 0);

  char* perm = nullptr;
  CHECK(hob_perm_report(a, HOB_FORMAT_JSON, &perm) == HOB_OK);
  CHECK(take(perm).find("\"jump\"") != std::string::npos);

  char* json = nullptr;
  REQUIRE(hob_atlas_to_json(a, &json) == HOB_OK);
  hob_atlas* b = nullptr;
  CHECK(hob_atlas_load_json(json, &b) == HOB_OK);
  hob_string_free(json);
  size_t tiles_b = 0;
  CHECK(hob_atlas_tile_count(b, &tiles_b) == HOB_OK);
  CHECK(tiles_b == tiles);

  char* svg = nullptr;
  const double start[2] = {0.0, 0.0};
  double u = 0, v = 0;
  CHECK(hob_random_point(a, 3, 42, &u, &v) == HOB_OK);
  const double pt[2] = {u, v};
  CHECK(hob_render_svg(a, 1, pt, 100000, &svg) == HOB_OK);
  const std::string s = take(svg);
  CHECK(s.find("class=\"orbit\"") != std::string::npos);
  CHECK(hob_render_svg(a, -1, start, 10, &svg) == HOB_E_INSIDE_TABLE);

  hob_atlas_free(b);
  hob_atlas_free(a);
  hob_atlas_free(nullptr);
}

TEST_CASE("errors carry status and message") {
  hob_atlas* a = nullptr;
  CHECK(hob_atlas_build(3, 6, 3, 0, &a) == HOB_E_DEGENERATE_GEOMETRY);
  CHECK(a == nullptr);
  CHECK(std::string(hob_last_error()).find("degenerate (Euclidean) pair") != std::string::npos);
  CHECK(std::string(hob_status_name(HOB_E_DEGENERATE_GEOMETRY)) == "DegenerateGeometry");

  CHECK(hob_atlas_build(3, 7, 6, 50, &a) == HOB_E_CAP_EXCEEDED);
  CHECK(hob_atlas_build(3, 7, 3, 0, nullptr) == HOB_E_INVALID_ARGUMENT);
  CHECK(hob_atlas_load_json("not json", &a) == HOB_E_PARSE);
  CHECK(hob_closed_forms(7, 3, 3, HOB_FORMAT_CSV, nullptr) == HOB_E_INVALID_ARGUMENT);
  char* out = nullptr;
  CHECK(hob_closed_forms(7, 3, 3, HOB_FORMAT_CSV, &out) == HOB_E_UNSUPPORTED);

  CHECK(hob_atlas_build(3, 7, 2, 0, &a) == HOB_OK);
  CHECK(std::string(hob_last_error()).empty());
  hob_atlas_free(a);
}

TEST_CASE("orbits and rotation numbers") {
  hob_atlas* a = nullptr;
  REQUIRE(hob_atlas_build(4, 5, 4, 0, &a) == HOB_OK);
  double u = 0, v = 0;
  REQUIRE(hob_random_point(a, 4, 7, &u, &v) == HOB_OK);
  double u2 = 0, v2 = 0;
  REQUIRE(hob_random_point(a, 4, 7, &u2, &v2) == HOB_OK);
  CHECK(u == u2);
  CHECK(v == v2);
  hob_atlas_free(a);

  hob_orbit_result r{};
  REQUIRE(hob_orbit(4, 5, u, v, 100000, &r) == HOB_OK);
  CHECK(r.period > 0);
  CHECK(r.iterations_used == r.period);
  char* rep = nullptr;
  CHECK(hob_orbit_report(&r, HOB_FORMAT_JSON, &rep) == HOB_OK);
  CHECK(take(rep).find("\"period\":" + std::to_string(r.period)) != std::string::npos);

  double closed = 0, numeric = 0;
  CHECK(hob_rotation_closed(4, 5, &closed) == HOB_OK);
  CHECK(hob_rotation_numeric(4, 5, 0.1, 100000, &numeric) == HOB_OK);
  CHECK(closed == doctest::Approx(0.35566243270259357).epsilon(1e-12));
  CHECK(std::abs(numeric - closed) < 1e-3);
}

TEST_CASE("closed forms and verification") {
  char* out = nullptr;
  REQUIRE(hob_closed_forms(3, 8, 4, HOB_FORMAT_CSV, &out) == HOB_OK);
  const std::string csv = take(out);
  CHECK(csv.rfind("family,m,n,k,q,l,s,p,j", 0) == 0);
  CHECK(csv.find("triangle,3,8,4,213") != std::string::npos);

  char* report = nullptr;
  int pass = 0;
  REQUIRE(hob_verify(4, 6, 3, 0, HOB_FORMAT_TEXT, &report, &pass) == HOB_OK);
  CHECK(pass == 1);
  take(report);
  REQUIRE(hob_verify(4, 6, 3, 1, HOB_FORMAT_JSON, &report, &pass) == HOB_OK);
  CHECK(pass == 0);
  CHECK(take(report).find("\"pass\": false") != std::string::npos);
}
