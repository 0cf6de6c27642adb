#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "flagtilt/cli.hpp"
#include "flagtilt/json_io.hpp"

using namespace flagtilt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FLAGTILT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("bbw") {
  const Run r = run({"bbw", "--n", "4", "--weight", "0,-2,0,-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("degree 1") != std::string::npos);
  CHECK(r.out.find("(0,-1,-1,-1)") != std::string::npos);
  CHECK(r.out.find("S(1,1,1,0)") != std::string::npos);

  const Run j = run({"--format", "json", "bbw", "--weight", "0,-1,0,-1"});
  CHECK(j.code == 0);
  CHECK(json::parse(j.out)["singular"] == true);

  CHECK(run({"bbw", "--n", "3", "--weight", "0,-2,0,-1"}).code == cli::kDataError);
  CHECK(run({"bbw", "--weight", "0,x"}).code == cli::kDataError);
}

TEST_CASE("counterexample exit code and json") {
  const Run r = run({"counterexample", "--case", "1", "--n", "4", "--dims", "2", "--format", "json"});
  CHECK(r.code == cli::kRefuted);
  const json j = json::parse(r.out);
  CHECK(j["verdict"] == "refuted");
  const json ext = j["readings"][0]["ext"];
  CHECK(ext["grade"] == "exact");
  CHECK(outcome_from_json(ext).at(1) == CharacterSum::single({1, 1, 1, 0}));
  CHECK(run({"counterexample", "--case", "2", "--n", "3", "--dims", "1,2"}).code == cli::kDataError);
}

TEST_CASE("kapranov listing") {
  const Run r = run({"kapranov", "--n", "3", "--dims", "1,2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("6 members") != std::string::npos);
  const Run j = run({"kapranov", "--n", "3", "--dims", "1,2", "--format", "json"});
  CHECK(collection_from_json(json::parse(j.out)).members.size() == 6);
}

TEST_CASE("check-strong") {
  CHECK(run({"check-strong", "--n", "4", "--dims", "2"}).code == cli::kConfirmed);
  const Run j = run({"kapranov", "--n", "2", "--dims", "1", "--format", "json"});
  json c = json::parse(j.out);
  std::swap(c["members"][0], c["members"][1]);
  const std::string path = "cli_wrong_order.json";
  {
    std::ofstream f(path);
    f << c.dump();
  }
  CHECK(run({"check-strong", "--collection", path}).code == cli::kRefuted);
  std::remove(path.c_str());
}

TEST_CASE("twist-check") {
  CHECK(run({"twist-check", "--n", "4", "--dims", "2"}).code == cli::kConfirmed);
  CHECK(run({"twist-check", "--n", "4", "--dims", "2", "--sigma"}).code == cli::kRefuted);
  CHECK(run({"twist-check", "--n", "4", "--dims", "1,2", "--sigma"}).code == cli::kDataError);
}

TEST_CASE("cohom and ext") {
  const Run r = run({"cohom", "--expr", data("case3_target.json"), "--format", "json"});
  CHECK(r.code == 0);
  const CohomologyOutcome o = outcome_from_json(json::parse(r.out));
  CHECK(o.grade == Grade::E1Bound);
  CHECK(o.euler == -CharacterSum::single({1, 1, 1}));
  const Run e = run({"cohom", "--expr", data("case3_target.json"), "--euler-only", "--format", "json"});
  CHECK(json::parse(e.out)["grade"] == "euler_only");
  const Run x = run({"ext", "--source", data("gr24_quot.json"), "--target", data("gr24_sym2.json")});
  CHECK(x.code == 0);
  CHECK(x.out.find("H^1 = S(1,1,1,0)") != std::string::npos);
  CHECK(run({"cohom", "--expr", "no/such/file.json"}).code == cli::kNoInput);
}

TEST_CASE("toric-check") {
  const Run r = run({"toric-check", "--tower", data("p1xp1_swap.json"), "--format", "json"});
  CHECK(r.code == cli::kConfirmed);
  const json j = json::parse(r.out);
  CHECK(j["grid_size"] == 4);
  CHECK(j["orbits"]["orbit_closed"] == true);
  CHECK(run({"toric-check", "--tower", data("hirzebruch1.json")}).code == cli::kConfirmed);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"kapranov", "--n", "3"}).code == cli::kUsage);
  CHECK(run({"kapranov", "--n", "3", "--dims", "1", "--bogus"}).code == cli::kUsage);
  CHECK(run({"--jobs", "0", "kapranov", "--n", "3", "--dims", "1"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("json output does not depend on the worker count") {
  const Run a = run({"--jobs", "1", "--format", "json", "check-strong", "--n", "4", "--dims", "1,3"});
  const Run b = run({"--jobs", "3", "--format", "json", "check-strong", "--n", "4", "--dims", "1,3"});
  CHECK(a.out == b.out);
}
