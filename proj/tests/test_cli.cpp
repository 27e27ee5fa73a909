#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

fs::path workdir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "sqw_cli_test";
    fs::create_directories(d);
    std::ofstream(d / "p0.json") << R"({"q":"1/3","sqrt_s":["1/2","1/3","1/4","1/5","1/6","1/7","1/8","1/9","1/10",)"
                                    R"("1/11","1/12","1/13","1/14","1/15","1/16","1/17","1/18"],)"
                                    R"("sqrt_xi":["1/3","1/4","1/5","1/6","1/7","1/8","1/9","1/10","1/11","1/12",)"
                                    R"("1/13","1/14","1/15","1/16","1/17","1/18","1/19"],"horizon":16})";
    std::ofstream(d / "bad.json") << R"({"q":"1/3","sqrt_s":["1/2","1","1/4"],"sqrt_xi":["1/3","1/4","1/5"],"horizon":2})";
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  fs::path out = workdir() / "stdout.txt";
  std::string cmd = std::string(SQW_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  int st = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  return r;
}

std::string p0() { return (workdir() / "p0.json").string(); }

}  // namespace

TEST_CASE("compute") {
  auto r = run("compute f --lambda '' --mu '' --vars 1");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["text"] == "1");
  CHECK(j["config"]["params"] == "P0");

  r = run("compute f --lambda 1 --mu '' --vars 1 --params " + p0());
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  // (s_1 xi_1 - kappa)/(xi_0 (1 - s_1^2)) at P0: s_1 xi_1 = 1/144, xi_0 = 1/9, s_1^2 = 1/81
  std::map<int, std::string> coef;
  for (const auto& t : j["result"]["terms"]) coef[t["exp"][0].get<int>()] = t["coef"];
  CHECK(coef[0] == "81/1280");
  CHECK(coef[1] == "-729/80");

  r = run("compute f --lambda 1 --at 1/4 --params " + p0());
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"] == "-567/256");

  CHECK(run("compute f --lambda 1,3").code == 2);
  CHECK(run("compute hl --lambda 1").code == 2);
  CHECK(run("compute bogus --lambda 1").code == 2);
}

TEST_CASE("verify") {
  auto r = run("verify ybe:hs --cap 4 --trials 20 --seed 7");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["report"]["failure_count"] == 0);
  CHECK(j["config"]["seed"] == 7);
  r = run("verify dual-cauchy --n 2 --m 2 --seed 1 --trials 1");
  CHECK(r.code == 0);
  CHECK(run("verify stochastic --perturb --trials 1").code == 1);
  CHECK(run("verify nosuch").code == 2);
  CHECK(run("verify ybe:nosuch").code == 2);
  // determinism
  auto a = run("verify one-var --trials 2 --seed 5");
  auto b = run("verify one-var --trials 2 --seed 5");
  CHECK(a.out == b.out);
}

TEST_CASE("integral") {
  auto r = run("integral --mu ''");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["difference"] == 0.0);
  CHECK(j["exact"] == "1");
  r = run("integral --mu 1");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["difference"].get<double>() < 1e-8);
  CHECK(run("integral --mu 1 --params " + (workdir() / "bad.json").string()).code == 1);
  CHECK(run("integral").code == 2);
}

TEST_CASE("list") {
  auto r = run("list");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["suites"].size() == 22);
  CHECK(j["ybe"].size() == 10);
}
