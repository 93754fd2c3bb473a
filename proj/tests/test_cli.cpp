#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path();
  const auto out = dir / ("hob_cli_out_" + std::to_string(::getpid()) + "_" + std::to_string(counter));
  const auto err = dir / ("hob_cli_err_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  const std::string cmd = std::string("\"") + HOB_CLI_PATH + "\" " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return r;
}

}  // namespace

TEST_CASE("counts") {
  const Run r = run("counts --m 3 --n 7 --max-rank 5 --format csv");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("layer,shape,rank,count,zero,X,Y,Z\n", 0) == 0);
  CHECK(r.out.find("3,N,5,33,") != std::string::npos);

  const Run j = run("counts --m 4 --n 5 --max-rank 4");
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("layers")[3].at("count") == 48);
}

TEST_CASE("build writes to --out") {
  const auto path = std::filesystem::temp_directory_path() / "hob_cli_atlas.json";
  const Run r = run("build --m 4 --n 5 --max-rank 3 --out " + path.string());
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const auto doc = nlohmann::json::parse(slurp(path));
  CHECK(doc.at("m") == 4);
  CHECK(doc.at("tiles").size() == 1 + 4 + 12 + 20);
  std::filesystem::remove(path);
}

TEST_CASE("perm, rotation, orbit and closed forms") {
  const Run p = run("perm --m 3 --n 7 --max-rank 5 --format csv");
  REQUIRE(p.code == 0);
  CHECK(p.out.find("3,7,2,N,12,5") != std::string::npos);

  const Run rot = run("rotation --m 4 --n 5 --format csv");
  REQUIRE(rot.code == 0);
  CHECK(rot.out.find("0.35566243270259") != std::string::npos);

  const Run a = run("orbit --m 3 --n 7 --seed 9 --format json");
  const Run b = run("orbit --m 3 --n 7 --seed 9 --format json");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out).at("period").get<long long>() > 0);

  const Run c = run("closed --m 3 --n 8 --k-max 5 --format csv");
  REQUIRE(c.code == 0);
  CHECK(c.out.find("triangle,3,8,5,795") != std::string::npos);
}

TEST_CASE("render") {
  const Run r = run("render --m 3 --n 7 --max-rank 4 --web-depth 1");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
  CHECK(r.out.find("class=\"web\"") != std::string::npos);
  CHECK(r.out == run("render --m 3 --n 7 --max-rank 4 --web-depth 1").out);
}

TEST_CASE("verify exit codes") {
  const Run ok = run("verify --m 4 --n 6 --k-max 3 --format text");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);

  const Run bad = run("verify --m 4 --n 6 --k-max 3 --jump-offset 1 --format text");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage and library errors") {
  const Run missing = run("counts --m 3");
  CHECK(missing.code == 1);
  CHECK_FALSE(missing.err.empty());

  const Run degenerate = run("build --m 3 --n 6");
  CHECK(degenerate.code == 1);
  CHECK(degenerate.err.find("degenerate (Euclidean) pair") != std::string::npos);

  const Run badfmt = run("counts --m 3 --n 7 --format yaml");
  CHECK(badfmt.code == 1);

  const Run nosub = run("");
  CHECK(nosub.code == 1);
}
