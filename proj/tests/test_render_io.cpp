#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "json.hpp"

#include "hob/error.hpp"
#include "hob/io.hpp"
#include "hob/render.hpp"
#include "hob/tiling.hpp"

using namespace hob;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

double segment_distance(const ChartPoint& a, const ChartPoint& b, const ChartPoint& p) {
  const double dx = b.u - a.u, dy = b.v - a.v;
  const double len2 = dx * dx + dy * dy;
  double s = len2 > 0 ? ((p.u - a.u) * dx + (p.v - a.v) * dy) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return std::hypot(a.u + s * dx - p.u, a.v + s * dy - p.v);
}

}  // namespace

TEST_CASE("table-only rendering") {
  const Atlas a = build_atlas(3, 7, 0);
  const std::string svg = render_svg(a);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_of(svg, "<polygon") == 1);
  CHECK(count_of(svg, "<circle") == 1);
  CHECK(svg.find("class=\"web\"") == std::string::npos);
}

TEST_CASE("one polygon per tile") {
  const Atlas a = build_atlas(3, 7, 4);
  const std::string svg = render_svg(a);
  CHECK(count_of(svg, "<polygon data-id") == a.tiles().size());
  CHECK(count_of(svg, "data-rank=\"4\"") == static_cast<std::size_t>(a.rank_count(4)));
}

TEST_CASE("web overlay lies on tile edges") {
  const Atlas a = build_atlas(3, 7, 7);
  const auto runs = web_samples(a.geometry().table, 1, 32, 4.0);
  REQUIRE(!runs.empty());
  std::size_t checked = 0;
  double worst = 0.0;
  for (const auto& run : runs) {
    for (const HPoint& x : run) {
      if (x.t() > 4.0 + 1e-9) continue;
      const ChartPoint p = chart(x);
      double best = 1e9;
      for (const Tile& t : a.tiles()) {
        for (std::size_t i = 0; i < t.vertices.size(); ++i) {
          best = std::min(best, segment_distance(chart(t.vertices[i]), chart(t.vertices[(i + 1) % t.vertices.size()]), p));
        }
      }
      worst = std::max(worst, best);
      ++checked;
    }
  }
  CHECK(checked > 100);
  CHECK(worst < 1e-6);

  RenderOptions opts;
  opts.web_depth = 1;
  const std::string svg = render_svg(a, opts);
  CHECK(svg.find("class=\"web\"") != std::string::npos);
  CHECK_THROWS_AS(web_samples(a.geometry().table, 1, 1, 4.0), Error);
}

TEST_CASE("rendering is deterministic") {
  const Atlas a = build_atlas(4, 5, 4);
  RenderOptions opts;
  opts.web_depth = 2;
  CHECK(render_svg(a, opts) == render_svg(build_atlas(4, 5, 4), opts));
}

TEST_CASE("atlas JSON round trip") {
  const Atlas a = build_atlas(4, 5, 5);
  const std::string text = atlas_to_json(a);
  const Atlas b = atlas_from_json(text);
  CHECK(b.m() == 4);
  CHECK(b.n() == 5);
  CHECK(b.tiles().size() == a.tiles().size());
  for (int r = 1; r <= 5; ++r) CHECK(b.rank_count(r) == a.rank_count(r));
  CHECK(counts_report(a, Format::Csv) == counts_report(b, Format::Csv));
  CHECK(atlas_to_json(b) == text);

  try {
    atlas_from_json("{\"m\": 4");
    FAIL("expected Parse");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Parse);
  }
  CHECK_THROWS_AS(atlas_from_json("{\"m\": 4, \"n\": 5}"), Error);
}

TEST_CASE("report formats") {
  const Atlas a = build_atlas(3, 7, 4);
  const std::string csv = counts_report(a, Format::Csv);
  CHECK(csv.rfind("layer,shape,rank,count,zero,X,Y,Z\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);

  const auto perms = all_layer_permutations(a);
  CHECK(perms.size() == 4);
  const std::string pcsv = permutations_report(a, perms, Format::Csv);
  CHECK(pcsv.rfind("m,n,layer,shape,size,jump\n", 0) == 0);
  const std::string ptext = permutations_report(a, perms, Format::Text);
  CHECK(ptext.find("not transitive") != std::string::npos);

  const auto j = nlohmann::json::parse(counts_report(a, Format::Json));
  CHECK(j.at("layers").size() == 4);
  CHECK(j.at("layers")[1].at("count") == 15);

  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("text") == Format::Text);
  CHECK_THROWS_AS(parse_format("yaml"), Error);

  RotationSummary rs{4, 5, 0.1, 1000, 0.3556, 0.35566};
  CHECK(rotation_report(rs, Format::Csv).rfind("m,n,theta0,iters,numeric,closed,difference\n", 0) == 0);
}
