// Command-line front end; talks to the library only through hob.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hob/hob.h"

namespace {

enum Exit { kOk = 0, kBadInput = 1, kMismatch = 2 };

struct Config {
  int m = 0;
  int n = 0;
  int max_rank = 6;
  int k_max = 4;
  std::int64_t iters = 100'000;
  double theta0 = 0.1;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;
  std::vector<double> point;
  std::vector<double> orbit_point;
  int web_depth = -1;
  std::size_t tile_budget = 0;
  std::int64_t jump_offset = 0;
};

struct Failure {
  int code;
};

hob_format format_of(const std::string& s) {
  if (s == "csv") return HOB_FORMAT_CSV;
  if (s == "text") return HOB_FORMAT_TEXT;
  return HOB_FORMAT_JSON;
}

void check(hob_status st) {
  if (st == HOB_OK) return;
  std::cerr << "error: " << hob_last_error() << " [" << hob_status_name(st) << "]\n";
  throw Failure{kBadInput};
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { hob_string_free(p); }
};

struct OwnedAtlas {
  hob_atlas* p = nullptr;
  ~OwnedAtlas() { hob_atlas_free(p); }
};

void emit(const Config& cfg, const char* text) {
  if (cfg.out.empty()) {
    std::fputs(text, stdout);
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f || !(f << text)) {
    std::cerr << "error: cannot write " << cfg.out << "\n";
    throw Failure{kBadInput};
  }
}

void build_atlas(const Config& cfg, int max_rank, OwnedAtlas& atlas) {
  check(hob_atlas_build(cfg.m, cfg.n, max_rank, cfg.tile_budget, &atlas.p));
}

int run_build(const Config& cfg) {
  OwnedAtlas atlas;
  build_atlas(cfg, cfg.max_rank, atlas);
  OwnedString s;
  check(hob_atlas_to_json(atlas.p, &s.p));
  emit(cfg, s.p);
  return kOk;
}

int run_counts(const Config& cfg) {
  OwnedAtlas atlas;
  build_atlas(cfg, cfg.max_rank, atlas);
  OwnedString s;
  check(hob_counts_report(atlas.p, format_of(cfg.format), &s.p));
  emit(cfg, s.p);
  return kOk;
}

int run_perm(const Config& cfg) {
  OwnedAtlas atlas;
  build_atlas(cfg, cfg.max_rank, atlas);
  OwnedString s;
  check(hob_perm_report(atlas.p, format_of(cfg.format), &s.p));
  emit(cfg, s.p);
  return kOk;
}

int run_rotation(const Config& cfg) {
  OwnedString s;
  check(hob_rotation_report(cfg.m, cfg.n, cfg.theta0, cfg.iters, format_of(cfg.format), &s.p));
  emit(cfg, s.p);
  return kOk;
}

int run_orbit(const Config& cfg) {
  double u = 0.0;
  double v = 0.0;
  if (cfg.point.size() == 2) {
    u = cfg.point[0];
    v = cfg.point[1];
  } else {
    OwnedAtlas atlas;
    build_atlas(cfg, cfg.max_rank, atlas);
    check(hob_random_point(atlas.p, cfg.max_rank, cfg.seed, &u, &v));
  }
  hob_orbit_result result{};
  check(hob_orbit(cfg.m, cfg.n, u, v, cfg.iters, &result));
  OwnedString s;
  check(hob_orbit_report(&result, format_of(cfg.format), &s.p));
  emit(cfg, s.p);
  return kOk;
}

int run_render(const Config& cfg) {
  OwnedAtlas atlas;
  build_atlas(cfg, cfg.max_rank, atlas);
  OwnedString s;
  const double* orbit = cfg.orbit_point.size() == 2 ? cfg.orbit_point.data() : nullptr;
  check(hob_render_svg(atlas.p, cfg.web_depth, orbit, cfg.iters, &s.p));
  emit(cfg, s.p);
  return kOk;
}

int run_verify(const Config& cfg) {
  OwnedString s;
  int pass = 0;
  check(hob_verify(cfg.m, cfg.n, cfg.k_max, cfg.jump_offset, format_of(cfg.format), &s.p, &pass));
  emit(cfg, s.p);
  if (!pass) {
    std::cerr << "verification mismatch for (" << cfg.m << "," << cfg.n << ")\n";
    return kMismatch;
  }
  return kOk;
}

int run_closed(const Config& cfg) {
  OwnedString s;
  check(hob_closed_forms(cfg.m, cfg.n, cfg.k_max, format_of(cfg.format), &s.p));
  emit(cfg, s.p);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Outer billiards on hyperbolic (M,N)-tilings"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"json", "csv", "text"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "sides of the table polygon")->required()->check(CLI::PositiveNumber);
    sub->add_option("--n", cfg.n, "sides of the other polygon")->required()->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember(formats));
    sub->add_option("--out", cfg.out, "output file (default stdout)");
  };
  auto with_rank = [&](CLI::App* sub) {
    sub->add_option("--max-rank", cfg.max_rank, "deepest tile rank to generate")->check(CLI::Range(0, 64));
    sub->add_option("--tile-budget", cfg.tile_budget, "abort beyond this many tiles");
  };

  auto* build = app.add_subcommand("build", "emit the atlas as JSON");
  common(build);
  with_rank(build);

  auto* counts = app.add_subcommand("counts", "layer sizes and type counts");
  common(counts);
  with_rank(counts);

  auto* perm = app.add_subcommand("perm", "jump of the billiard map on each layer");
  common(perm);
  with_rank(perm);

  auto* rotation = app.add_subcommand("rotation", "numeric and closed-form rotation numbers");
  common(rotation);
  rotation->add_option("--iters", cfg.iters, "circle-map iterates")->check(CLI::PositiveNumber);
  rotation->add_option("--theta0", cfg.theta0, "starting angle");

  auto* orbit = app.add_subcommand("orbit", "period of a given or seeded random point");
  common(orbit);
  with_rank(orbit);
  orbit->add_option("--point", cfg.point, "chart coordinates u v")->expected(2);
  orbit->add_option("--seed", cfg.seed, "seed for the random point");
  orbit->add_option("--iters", cfg.iters, "iteration cap")->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "Klein-chart SVG");
  common(render);
  with_rank(render);
  render->add_option("--web-depth", cfg.web_depth, "web overlay depth (negative: none)");
  render->add_option("--orbit-point", cfg.orbit_point, "draw the orbit of chart point u v")->expected(2);
  render->add_option("--iters", cfg.iters, "iteration cap for the orbit")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "cross-check geometry, recurrences and closed forms");
  common(verify);
  verify->add_option("--k-max", cfg.k_max, "deepest layer to check")->check(CLI::Range(1, 12));
  verify->add_option("--jump-offset", cfg.jump_offset, "perturb simulated jumps (self-test of the harness)");

  auto* closed = app.add_subcommand("closed", "closed-form layer sizes and jumps");
  common(closed);
  closed->add_option("--k-max", cfg.k_max, "deepest layer")->check(CLI::Range(1, 40));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kBadInput;
  }

  try {
    if (*build) return run_build(cfg);
    if (*counts) return run_counts(cfg);
    if (*perm) return run_perm(cfg);
    if (*rotation) return run_rotation(cfg);
    if (*orbit) return run_orbit(cfg);
    if (*render) return run_render(cfg);
    if (*verify) return run_verify(cfg);
    if (*closed) return run_closed(cfg);
  } catch (const Failure& f) {
    return f.code;
  }
  return kBadInput;
}
