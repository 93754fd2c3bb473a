#define HOB_BUILDING_LIBRARY
#include "hob/hob.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <random>
#include <string>

#include "hob/billiards.hpp"
#include "hob/error.hpp"
#include "hob/io.hpp"
#include "hob/render.hpp"
#include "hob/sampling.hpp"
#include "hob/spectral.hpp"
#include "hob/tiling.hpp"
#include "hob/verify.hpp"

struct hob_atlas {
  hob::Atlas atlas;
};

namespace {

thread_local std::string g_last_error;

hob_status to_status(hob::Errc code) {
  using hob::Errc;
  switch (code) {
    case Errc::InvalidArgument: return HOB_E_INVALID_ARGUMENT;
    case Errc::DegenerateGeometry: return HOB_E_DEGENERATE_GEOMETRY;
    case Errc::Unsupported: return HOB_E_UNSUPPORTED;
    case Errc::CapExceeded: return HOB_E_CAP_EXCEEDED;
    case Errc::EmptyLayer: return HOB_E_EMPTY_LAYER;
    case Errc::LayerOutOfRange: return HOB_E_LAYER_OUT_OF_RANGE;
    case Errc::AmbiguousSupport: return HOB_E_AMBIGUOUS_SUPPORT;
    case Errc::InsideTable: return HOB_E_INSIDE_TABLE;
    case Errc::ImageOutsideAtlas: return HOB_E_IMAGE_OUTSIDE_ATLAS;
    case Errc::CenterMismatch: return HOB_E_CENTER_MISMATCH;
    case Errc::NotCyclic: return HOB_E_NOT_CYCLIC;
    case Errc::InvalidLabel: return HOB_E_INVALID_LABEL;
    case Errc::Overflow: return HOB_E_OVERFLOW;
    case Errc::Parse: return HOB_E_PARSE;
    case Errc::Internal: return HOB_E_INTERNAL;
  }
  return HOB_E_INTERNAL;
}

template <class F>
hob_status guarded(F&& f) noexcept {
  g_last_error.clear();
  try {
    f();
    return HOB_OK;
  } catch (const hob::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HOB_E_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HOB_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return HOB_E_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw hob::Error(hob::Errc::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

hob::Format to_format(hob_format f) {
  switch (f) {
    case HOB_FORMAT_JSON: return hob::Format::Json;
    case HOB_FORMAT_CSV: return hob::Format::Csv;
    case HOB_FORMAT_TEXT: return hob::Format::Text;
  }
  throw hob::Error(hob::Errc::InvalidArgument, "unknown output format");
}

hob::Shape to_shape(hob_shape s) {
  switch (s) {
    case HOB_SHAPE_M: return hob::Shape::MGon;
    case HOB_SHAPE_N: return hob::Shape::NGon;
  }
  throw hob::Error(hob::Errc::InvalidArgument, "unknown shape");
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string verify_csv(const hob::VerifyReport& r) {
  std::string out = "name,expected,observed,tolerance,pass\n";
  for (const auto& c : r.checks) {
    out += csv_field(c.name) + ',' + csv_field(c.expected.dump()) + ',' + csv_field(c.observed.dump()) + ',' +
           std::to_string(c.tolerance) + ',' + (c.pass ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace

extern "C" {

const char* hob_last_error(void) { return g_last_error.c_str(); }

const char* hob_status_name(hob_status status) {
  switch (status) {
    case HOB_OK: return "ok";
    case HOB_E_OUT_OF_MEMORY: return "out of memory";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(hob::Errc::Internal)) return "unknown status";
  return hob::errc_name(static_cast<hob::Errc>(code));
}

void hob_string_free(char* s) { std::free(s); }

hob_status hob_atlas_build(int m, int n, int max_rank, size_t tile_budget, hob_atlas** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = nullptr;
    hob::BuildOptions opts;
    if (tile_budget != 0) opts.tile_budget = tile_budget;
    auto h = std::make_unique<hob_atlas>(hob_atlas{hob::build_atlas(m, n, max_rank, opts)});
    *out = h.release();
  });
}

hob_status hob_atlas_load_json(const char* text, hob_atlas** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    auto h = std::make_unique<hob_atlas>(hob_atlas{hob::atlas_from_json(text)});
    *out = h.release();
  });
}

void hob_atlas_free(hob_atlas* atlas) { delete atlas; }

hob_status hob_atlas_tile_count(const hob_atlas* atlas, size_t* out) {
  return guarded([&] {
    require(atlas && out, "null argument");
    *out = atlas->atlas.tiles().size();
  });
}

hob_status hob_atlas_layer_size(const hob_atlas* atlas, int k, hob_shape shape, size_t* out) {
  return guarded([&] {
    require(atlas && out, "null argument");
    *out = atlas->atlas.layer(k, to_shape(shape)).size();
  });
}

hob_status hob_atlas_to_json(const hob_atlas* atlas, char** out) {
  return guarded([&] {
    require(atlas && out, "null argument");
    *out = dup_string(hob::atlas_to_json(atlas->atlas));
  });
}

hob_status hob_counts_report(const hob_atlas* atlas, hob_format format, char** out) {
  return guarded([&] {
    require(atlas && out, "null argument");
    *out = dup_string(hob::counts_report(atlas->atlas, to_format(format)));
  });
}

hob_status hob_layer_permutation(const hob_atlas* atlas, int k, hob_shape shape, int64_t* size, int64_t* jump) {
  return guarded([&] {
    require(atlas && size && jump, "null argument");
    const auto p = hob::layer_permutation(atlas->atlas, k, to_shape(shape));
    *size = p.size;
    *jump = p.jump;
  });
}

hob_status hob_perm_report(const hob_atlas* atlas, hob_format format, char** out) {
  return guarded([&] {
    require(atlas && out, "null argument");
    const auto perms = hob::all_layer_permutations(atlas->atlas);
    *out = dup_string(hob::permutations_report(atlas->atlas, perms, to_format(format)));
  });
}

hob_status hob_render_svg(const hob_atlas* atlas, int web_depth, const double* orbit_chart, int64_t orbit_max_iter,
                          char** out) {
  return guarded([&] {
    require(atlas && out, "null argument");
    hob::RenderOptions opts;
    opts.web_depth = web_depth;
    if (orbit_chart) {
      const hob::Polygon& table = atlas->atlas.geometry().table;
      const hob::HPoint start = hob::HPoint::from_chart(orbit_chart[0], orbit_chart[1]);
      const auto res = hob::orbit(table, start, orbit_max_iter);
      if (res.period) {
        hob::HPoint x = start;
        for (std::int64_t i = 0; i < *res.period; ++i) {
          opts.orbit.push_back(x);
          x = hob::half_turn(table.vertices[static_cast<std::size_t>(res.support_sequence[static_cast<std::size_t>(i)])])
                  .apply(x);
        }
      }
    }
    *out = dup_string(hob::render_svg(atlas->atlas, opts));
  });
}

hob_status hob_random_point(const hob_atlas* atlas, int max_rank, uint64_t seed, double* u, double* v) {
  return guarded([&] {
    require(atlas && u && v, "null argument");
    std::mt19937_64 rng(seed);
    const auto s = hob::random_tile_point(atlas->atlas, max_rank, rng);
    const auto c = hob::chart(s.point);
    *u = c.u;
    *v = c.v;
  });
}

hob_status hob_orbit(int m, int n, double u, double v, int64_t max_iter, hob_orbit_result* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(max_iter > 0, "max_iter must be positive");
    const auto geo = hob::mn_geometry(m, n);
    const auto res = hob::orbit(geo.table, hob::HPoint::from_chart(u, v), max_iter);
    const auto& p = res.start.vec();
    out->point[0] = p.x;
    out->point[1] = p.y;
    out->point[2] = p.t;
    out->period = res.period ? *res.period : -1;
    out->iterations_used = res.iterations_used;
  });
}

hob_status hob_orbit_report(const hob_orbit_result* result, hob_format format, char** out) {
  return guarded([&] {
    require(result && out, "null argument");
    hob::OrbitResult r;
    r.start = hob::HPoint::project({result->point[0], result->point[1], result->point[2]});
    if (result->period >= 0) r.period = result->period;
    r.iterations_used = result->iterations_used;
    *out = dup_string(hob::orbit_report(r, to_format(format)));
  });
}

hob_status hob_rotation_numeric(int m, int n, double theta0, int64_t iters, double* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = hob::rotation_number_numeric(hob::mn_geometry(m, n).table, theta0, iters);
  });
}

hob_status hob_rotation_closed(int m, int n, double* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = static_cast<double>(hob::rotation_number_closed(hob::closed_form_params(m, n)));
  });
}

hob_status hob_rotation_report(int m, int n, double theta0, int64_t iters, hob_format format, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    hob::RotationSummary s;
    s.m = m;
    s.n = n;
    s.theta0 = theta0;
    s.iters = iters;
    s.numeric = hob::rotation_number_numeric(hob::mn_geometry(m, n).table, theta0, iters);
    s.closed = static_cast<double>(hob::rotation_number_closed(hob::closed_form_params(m, n)));
    *out = dup_string(hob::rotation_report(s, to_format(format)));
  });
}

hob_status hob_closed_forms(int m, int n, int k_max, hob_format format, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    hob::mn_geometry(m, n);
    const auto params = hob::closed_form_params(m, n);
    const int k0 = params.family == hob::Family::Triangle ? 2 : 1;
    require(k_max >= k0, "k_max is below the first closed-form layer");
    std::vector<hob::ClosedFormValues> rows;
    for (int k = k0; k <= k_max; ++k) rows.push_back(hob::closed_forms(params, k));
    const double rho = static_cast<double>(hob::rotation_number_closed(params));
    *out = dup_string(hob::closed_forms_report(rows, rho, to_format(format)));
  });
}

hob_status hob_verify(int m, int n, int k_max, int64_t jump_offset, hob_format format, char** report, int* pass) {
  return guarded([&] {
    require(report && pass, "null argument");
    hob::VerifyOptions opts;
    opts.jump_offset = jump_offset;
    const auto r = hob::verify_all(m, n, k_max, opts);
    std::string text;
    switch (to_format(format)) {
      case hob::Format::Json: text = r.to_json().dump(2) + "\n"; break;
      case hob::Format::Csv: text = verify_csv(r); break;
      case hob::Format::Text: text = r.to_text(); break;
    }
    *report = dup_string(text);
    *pass = r.passed() ? 1 : 0;
  });
}

}  // extern "C"
