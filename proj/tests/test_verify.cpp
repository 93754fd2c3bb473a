#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>

#include "hob/verify.hpp"

using namespace hob;

namespace {

bool has_note(const VerifyReport& r, const std::string& needle) {
  return std::any_of(r.discrepancy_notes.begin(), r.discrepancy_notes.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

const Check* find_check(const VerifyReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("report bookkeeping") {
  VerifyReport r;
  r.expect_equal("a", 3, 3);
  r.expect_near("b", 1.0, 1.0005, 1e-3);
  CHECK(r.passed());
  r.expect_near("c", 1.0, 1.01, 1e-3);
  CHECK_FALSE(r.passed());
  const auto j = r.to_json();
  CHECK(j.at("pass") == false);
  CHECK(j.at("checks").size() == 3);
  CHECK(r.to_text().find("FAIL") != std::string::npos);
}

TEST_CASE("(3,7) passes with the expected counts and jumps") {
  const VerifyReport r = verify_all(3, 7, 4);
  CHECK(r.passed());
  for (const char* name : {"N-gon layer 1 count: atlas vs recurrence", "N-gon layer 4 count: atlas vs recurrence",
                           "N-gon layer 4 jump: simulation vs recurrence"}) {
    CAPTURE(name);
    CHECK(find_check(r, name) != nullptr);
  }
  CHECK(find_check(r, "N-gon layer 2 count: atlas vs recurrence")->observed == 12);
  CHECK(find_check(r, "N-gon layer 3 count: atlas vs recurrence")->observed == 33);
  CHECK(find_check(r, "N-gon layer 4 count: atlas vs recurrence")->observed == 87);
  CHECK(find_check(r, "N-gon layer 2 jump: simulation vs recurrence")->observed == 5);
  CHECK(find_check(r, "N-gon layer 3 jump: simulation vs recurrence")->observed == 14);
  CHECK(find_check(r, "N-gon layer 4 jump: simulation vs recurrence")->observed == 37);

  for (int k = 2; k <= 4; ++k) {
    CHECK(has_note(r, "N-gon layer " + std::to_string(k) + ": the triangle-family display"));
  }
  CHECK(has_note(r, "0.333333 of the geometric count 12"));
  CHECK(has_note(r, "M-gon layer 1: jump 6 and layer size 15 share the factor 3"));
}

TEST_CASE("(4,5) records the plus-sign small cone display") {
  const VerifyReport r = verify_all(4, 5, 3);
  CHECK(r.passed());
  CHECK(has_note(r, "N-gon layer 3: plus-sign small-cone form gives 7.660254"));
  CHECK(has_note(r, "implies 8 tiles per small cone"));
}

TEST_CASE("negative control: perturbed jumps fail") {
  VerifyOptions opts;
  opts.jump_offset = 1;
  const VerifyReport r = verify_dynamics(3, 7, 3, opts);
  CHECK_FALSE(r.passed());
  const Check* c = find_check(r, "N-gon layer 2 jump: simulation vs recurrence");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  CHECK(c->observed == 6);
}

TEST_CASE("M = N adds the single-shape reduction") {
  const VerifyReport r = verify_all(5, 5, 3);
  CHECK(r.passed());
  const VerifyReport red = verify_reduction(6);
  CHECK(red.passed());
  CHECK(red.checks.size() > 5);
}

TEST_CASE("periodicity sweep") {
  PeriodicityOptions opts;
  opts.samples = 40;
  opts.max_rank = 5;
  const VerifyReport r = verify_periodicity(4, 6, opts);
  CHECK(r.passed());
  CHECK(r.discrepancy_notes.empty());
}

TEST_CASE("rotation checks") {
  const VerifyReport r = verify_dynamics(3, 8, 4);
  CHECK(r.passed());
  const Check* c = find_check(r, "rotation number: circle map (100000 iterates) vs closed form");
  REQUIRE(c != nullptr);
  CHECK(c->tolerance == 1e-3);
}
