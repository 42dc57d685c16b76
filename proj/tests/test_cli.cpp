#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "digitop/cli.hpp"

using digitop::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DIGITOP_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("fix prints an orbit report") {
  auto r = invoke({"fix", "--space", data("interval.json"), "--map", "T", "--start", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("eventually constant at (1)") != std::string::npos);

  auto j = invoke({"fix", "--space", data("interval.json"), "--map", "Flip", "--start", "0", "--format", "json"});
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["orbits"][0]["kind"] == "eventually-periodic");
  CHECK(doc["orbits"][0]["period"] == 2);

  auto alt = invoke({"fix", "--space", data("interval.json"), "--map", "T", "--map2", "S", "--format", "json"});
  REQUIRE(alt.code == 0);
  CHECK(nlohmann::json::parse(alt.out)["orbits"].size() == 4);

  auto z = invoke({"fix", "--space", data("affine.json"), "--map", "G", "--start", "0", "--max-steps", "3"});
  CHECK(z.code == 0);
  CHECK(z.out.find("0 1 2 3") != std::string::npos);
}

TEST_CASE("classify prints condition verdicts with minimal constants") {
  auto r = invoke({"classify", "--space", data("interval.json"), "--map", "T"});
  CHECK(r.code == 0);
  CHECK(r.out.find("minimal constant") != std::string::npos);
  CHECK(r.out.find("kannan") != std::string::npos);

  auto j = invoke({"classify", "--space", data("interval.json"), "--map", "T", "--params", "k=3/4,r=1/2", "--format",
                   "json"});
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["conditions"].size() == 4);
  CHECK(doc["parameters"]["k"] == "3/4");

  auto pair = invoke({"classify", "--space", data("interval.json"), "--map", "T", "--map2", "S", "--format", "json"});
  REQUIRE(pair.code == 0);
  CHECK(nlohmann::json::parse(pair.out)["conditions"].size() == 3);

  auto flip = invoke({"classify", "--space", data("interval.json"), "--map", "Flip", "--expect-pass"});
  CHECK(flip.code == 1);

  auto z = invoke({"classify", "--space", data("affine.json"), "--map", "G", "--map2", "H", "--format", "json"});
  REQUIRE(z.code == 0);
  auto zd = nlohmann::json::parse(z.out);
  CHECK(zd["dominates"] == true);
  CHECK(zd["range_included"] == true);
  CHECK(zd["G_fixed_points"] == "none");
}

TEST_CASE("check-map, hausdorff and fpp") {
  auto c = invoke({"check-map", "--space", data("square.json"), "--map", "Rotate"});
  CHECK(c.code == 0);
  CHECK(c.out.find("fixed points") != std::string::npos);

  auto h = invoke({"hausdorff", "--space", data("square.json"), "--set-a", "0,0", "--set-b", "1,1"});
  CHECK(h.code == 0);
  CHECK(h.out.rfind("sqrt(2)", 0) == 0);

  auto f = invoke({"fpp", "--space", data("interval.json"), "--format", "json"});
  CHECK(f.code == 0);
  CHECK(nlohmann::json::parse(f.out)["has_fpp"] == false);
  CHECK(invoke({"fpp", "--space", data("interval.json"), "--expect-pass"}).code == 1);
}

TEST_CASE("search subcommand") {
  auto r = invoke({"search", "--assertion", "sum-domination", "--size-bound", "2", "--grid", "1/2", "--format", "json"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["status"] == "counterexample-found");
  CHECK(doc["counterexample"]["replays"] == true);
  auto strict = invoke({"search", "--assertion", "sum-domination", "--size-bound", "2", "--grid", "1/2", "--expect-pass"});
  CHECK(strict.code == 1);
}

TEST_CASE("input errors exit with 2") {
  auto bad = invoke({"check-map", "--space", data("halving.json"), "--map", "F"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("/maps/0/pairs/1") != std::string::npos);
  CHECK(bad.err.find("at (1)") != std::string::npos);

  CHECK(invoke({"check-map", "--space", data("missing.json"), "--map", "F"}).code == 2);
  CHECK(invoke({"check-map", "--space", data("interval.json"), "--map", "Nope"}).code == 2);
  CHECK(invoke({"fix", "--space", data("interval.json"), "--map", "T", "--start", "9"}).code == 2);
  CHECK(invoke({"classify", "--space", data("interval.json"), "--map", "T", "--params", "r=1"}).code == 2);
  CHECK(invoke({"search", "--assertion", "nope"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"verify-paper", "--format", "xml"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}
