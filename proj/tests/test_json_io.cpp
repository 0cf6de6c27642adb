#include <doctest.h>

#include "flagtilt/error.hpp"
#include "flagtilt/json_io.hpp"

using namespace flagtilt;

TEST_CASE("integers") {
  CHECK(int_to_json(Int(-5)) == json(-5));
  const Int big = Int(1) << 70;
  CHECK(int_to_json(big).is_string());
  CHECK(int_from_json(int_to_json(big)) == big);
  CHECK(int_from_json(json("-12")) == -12);
  CHECK_THROWS_AS(int_from_json(json("1.5")), Error);
  CHECK_THROWS_AS(int_from_json(json(true)), Error);
}

TEST_CASE("weights and characters round trip") {
  const GLWeight w{3, 0, -2};
  CHECK(to_json(w) == json::parse("[3,0,-2]"));
  CHECK(weight_from_json(to_json(w)) == w);
  CharacterSum c(3);
  c.add({1, 1, 1}, -2);
  c.add({2, 0, 0}, 5);
  CHECK(character_from_json(to_json(c), 3) == c);
  CHECK(to_json(c)[0].contains("weight"));
  CHECK(to_json(c)[0].contains("mult"));
}

TEST_CASE("bundle expressions use the published schema") {
  const json j = json::parse(R"({"flag":{"n":3,"dims":[1,2]},"terms":[{"mult":1,"factors":[{"slot":"sub","index":1,"weight":[1]}]}]})");
  const BundleExpr e = bundle_from_json(j);
  CHECK(e == BundleExpr::monomial(FlagShape(3, {1, 2}), {{Slot::sub(1), {1}}}));
  CHECK(bundle_from_json(to_json(e)) == e);
  CHECK_THROWS_AS(bundle_from_json(json::parse(R"({"flag":{"n":3,"dims":[1,2]},"terms":[{"factors":[{"slot":"left","index":1,"weight":[1]}]}]})")), Error);
  CHECK_THROWS_AS(bundle_from_json(json::parse(R"({"flag":{"n":3,"dims":[2,1]},"terms":[]})")), InvalidShape);
  CHECK_THROWS_AS(bundle_from_json(json::parse(R"({"terms":[]})")), Error);
}

TEST_CASE("outcomes round trip") {
  const BundleExpr e = BundleExpr::monomial(FlagShape(4, {2}), {{Slot::sub(1), {2, 0}}, {Slot::quot(1), {1, 0}}});
  const CohomologyOutcome o = cohomology(e);
  const json j = to_json(o);
  CHECK(j["grade"] == "exact");
  CHECK(j["by_degree"].contains("1"));
  CHECK(outcome_from_json(j) == o);
  CHECK(outcome_from_json(json::parse(j.dump())) == o);
}

TEST_CASE("collections round trip") {
  const Collection c = enumerate_collection(FlagShape(3, {1, 2}));
  const Collection back = collection_from_json(json::parse(to_json(c).dump()));
  CHECK(back.shape == c.shape);
  CHECK(back.members == c.members);
}

TEST_CASE("towers round trip") {
  const json j = json::parse(R"({"base_dim":1,"levels":[{"bundles":[[[0],[1]]],"perms":[[0]]}]})");
  const TowerSpec t = tower_from_json(j);
  CHECK(t.base_dim() == 1);
  CHECK(t.grid_size() == 4);
  CHECK(to_json(t) == j);
  CHECK_THROWS_AS(tower_from_json(json::parse(R"({"base_dim":1,"levels":[{"bundles":[[[0],[-1]]]}]})")), InvalidTower);
}

TEST_CASE("reports serialize deterministically") {
  const Collection c = enumerate_collection(FlagShape(4, {2}));
  const std::string a = to_json(check_strong_exceptional(c.members, 1)).dump();
  const std::string b = to_json(check_strong_exceptional(c.members, 3)).dump();
  CHECK(a == b);
  const json r = json::parse(a);
  CHECK(r["overall"] == "confirmed");
  CHECK(r["pairs"].size() == 36);
  const json cx = to_json(counterexample_case(3, FlagShape(3, {1, 2})));
  CHECK(cx["readings"].size() == 2);
  CHECK(cx["readings"][1]["status"]["witness"]["kind"] == "euler");
}
