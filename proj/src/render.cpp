#include "hob/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hob/billiards.hpp"
#include "hob/error.hpp"

namespace hob {

namespace {

constexpr const char* kRankFill[] = {"#f4f1de", "#e07a5f", "#81b29a", "#f2cc8f", "#3d85c6",
                                     "#c27ba0", "#93c47d", "#ffd966", "#8e7cc3", "#76a5af"};

const char* stroke_for(const Tile& t) {
  if (t.shape == Shape::MGon) return "#555555";
  switch (t.type) {
    case TypeLabel::Table: return "#000000";
    case TypeLabel::Zero: return "#7f7f7f";
    case TypeLabel::X: return "#cc0000";
    case TypeLabel::Y: return "#1155cc";
    case TypeLabel::Z: return "#38761d";
    case TypeLabel::Unlabeled: break;
  }
  return "#555555";
}

struct Canvas {
  double half;
  double scale;

  void put(std::ostringstream& os, const ChartPoint& c) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", half + scale * c.u, half - scale * c.v);
    os << buf;
  }
};

// Point at distance s from v on the geodesic through v, heading away from `away_from`.
HPoint along_ray(const HPoint& v, const HPoint& away_from, double s) {
  const double ch = std::max(1.0, -minkowski_inner(v.vec(), away_from.vec()));
  const double sh = std::sqrt(ch * ch - 1.0);
  const Vec3 u = (1.0 / sh) * (ch * v.vec() - away_from.vec());
  return HPoint::project(std::cosh(s) * v.vec() + std::sinh(s) * u);
}

}  // namespace

std::vector<std::vector<HPoint>> web_samples(const Polygon& table, int depth, int samples_per_ray, double max_t) {
  if (samples_per_ray < 2) throw Error(Errc::InvalidArgument, "samples_per_ray must be at least 2");
  const std::size_t k = table.vertices.size();
  std::vector<std::vector<HPoint>> runs;

  // forward: rays where the inverse is undefined, pushed by the map;
  // backward: rays where the map is undefined, pulled back by the inverse.
  for (const bool forward : {true, false}) {
    std::vector<std::vector<HPoint>> current;
    for (std::size_t i = 0; i < k; ++i) {
      const HPoint& v = table.vertices[forward ? (i + 1) % k : i];
      const HPoint& other = table.vertices[forward ? i : (i + 1) % k];
      const double s_max = std::acosh(std::max(max_t, v.t() + 1.0)) + std::acosh(v.t());
      std::vector<HPoint> ray;
      for (int j = 1; j <= samples_per_ray; ++j) {
        const HPoint p = along_ray(v, other, s_max * j / samples_per_ray);
        if (p.t() > max_t) break;
        ray.push_back(p);
      }
      if (ray.size() >= 2) current.push_back(std::move(ray));
    }

    for (int level = 0;; ++level) {
      for (const auto& r : current) runs.push_back(r);
      if (level >= depth) break;
      std::vector<std::vector<HPoint>> next_level;
      for (const auto& r : current) {
        std::vector<HPoint> run;
        int run_support = -1;
        auto flush = [&] {
          if (run.size() >= 2) next_level.push_back(std::move(run));
          run.clear();
          run_support = -1;
        };
        for (const HPoint& p : r) {
          int sv;
          try {
            sv = forward ? support_vertex(table, p) : support_vertex_inverse(table, p);
          } catch (const Error&) {
            flush();
            continue;
          }
          if (sv != run_support) flush();
          run_support = sv;
          const HPoint img = half_turn(table.vertices[static_cast<std::size_t>(sv)]).apply(p);
          if (img.t() > max_t) {
            flush();
            continue;
          }
          run.push_back(img);
        }
        flush();
      }
      current = std::move(next_level);
    }
  }
  return runs;
}

std::string render_svg(const Atlas& atlas, const RenderOptions& options) {
  if (options.size_px < 16) throw Error(Errc::InvalidArgument, "size_px must be at least 16");
  const double half = options.size_px / 2.0;
  const Canvas canvas{half, half - 4.0};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size_px << "\" height=\"" << options.size_px
     << "\" viewBox=\"0 0 " << options.size_px << ' ' << options.size_px << "\">\n";
  os << "<circle cx=\"" << half << "\" cy=\"" << half << "\" r=\"" << canvas.scale
     << "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

  os << "<g stroke-width=\"0.6\" stroke-linejoin=\"round\">\n";
  for (const Tile& t : atlas.tiles()) {
    const std::size_t nfill = sizeof kRankFill / sizeof kRankFill[0];
    os << "<polygon data-id=\"" << t.id << "\" data-rank=\"" << t.rank << "\" data-type=\""
       << type_label_name(t.type) << "\" fill=\"" << kRankFill[static_cast<std::size_t>(t.rank) % nfill]
       << "\" stroke=\"" << stroke_for(t) << "\" points=\"";
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
      if (i) os << ' ';
      canvas.put(os, chart(t.vertices[i]));
    }
    os << "\"/>\n";
  }
  os << "</g>\n";

  if (options.web_depth >= 0) {
    const Polygon& poly = atlas.geometry().table;
    const auto runs = web_samples(poly, options.web_depth, options.web_samples_per_ray, atlas.outer_t());
    os << "<g class=\"web\" fill=\"none\" stroke=\"#990000\" stroke-width=\"1.2\">\n";
    for (const auto& run : runs) {
      os << "<polyline points=\"";
      for (std::size_t i = 0; i < run.size(); ++i) {
        if (i) os << ' ';
        canvas.put(os, chart(run[i]));
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
  }

  if (!options.orbit.empty()) {
    os << "<polygon class=\"orbit\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\" stroke-dasharray=\"3,2\" "
          "points=\"";
    for (std::size_t i = 0; i < options.orbit.size(); ++i) {
      if (i) os << ' ';
      canvas.put(os, chart(options.orbit[i]));
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace hob
