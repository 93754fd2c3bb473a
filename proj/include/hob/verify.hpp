#pragma once

// Cross-validation of the geometric atlas and billiard simulation against the
// exact recurrences and closed forms.
//
// Mismatches of the formulas as written (as opposed to their corrected,
// integer-consistent versions) are recorded as discrepancy notes and do not
// affect the pass flag.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hob/tiling.hpp"

namespace hob {

struct Check {
  std::string name;
  nlohmann::json expected;
  nlohmann::json observed;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  int m = 0;
  int n = 0;
  int k_max = 0;
  std::vector<Check> checks;
  std::vector<std::string> discrepancy_notes;

  bool passed() const noexcept;
  void merge(const VerifyReport& other);

  // Exact integer comparison.
  void expect_equal(std::string name, std::int64_t expected, std::int64_t observed);
  // |expected - observed| <= tolerance.
  void expect_near(std::string name, double expected, double observed, double tolerance);
  void expect_true(std::string name, bool ok, nlohmann::json observed = nullptr);
  void fail(std::string name, const std::string& error);

  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  BuildOptions build;
  std::int64_t rotation_iters = 100'000;
  double theta0 = 0.1;
  // Added to every observed jump before comparison; a nonzero value is a
  // negative control for the harness itself.
  std::int64_t jump_offset = 0;
};

// Atlas layer counts and type subcounts against the recurrence and the
// closed forms for layers 1..k_max of both shapes; the angular type word of
// each layer against one substitution step of the previous one.
VerifyReport verify_counts(int m, int n, int k_max, const VerifyOptions& options = {});

// Rank preservation, layer jumps against the exact and closed-form values,
// and rotation numbers.
VerifyReport verify_dynamics(int m, int n, int k_max, const VerifyOptions& options = {});

// The M = N case against the single-shape formulas.
VerifyReport verify_reduction(int n, const VerifyOptions& options = {});

struct PeriodicityOptions {
  int samples = 100;
  int max_rank = 6;
  std::uint64_t seed = 1;
  std::int64_t max_iter = 100'000;
};

// Seeded random interior points: every orbit must close, and the period must
// divide (sides of its tile) x (size of its layer).
VerifyReport verify_periodicity(int m, int n, const PeriodicityOptions& options = {},
                                const BuildOptions& build = {});

// Counts + dynamics, plus the reduction when M = N.
VerifyReport verify_all(int m, int n, int k_max, const VerifyOptions& options = {});

}  // namespace hob
