#include <doctest.h>

#include <algorithm>
#include <set>

#include "flagtilt/error.hpp"
#include "flagtilt/toric.hpp"
#include "support/oracles.hpp"

using namespace flagtilt;

namespace {

MultiDegree md(std::initializer_list<int> xs) {
  MultiDegree d;
  for (int x : xs) d.emplace_back(x);
  return d;
}

// n copies of P^r over a point, the factors permuted by `perms`.
TowerSpec product(std::size_t copies, std::size_t r, std::vector<std::vector<std::size_t>> perms = {}) {
  TowerLevel level;
  level.bundles.assign(copies, std::vector<MultiDegree>(r + 1));
  level.perms = std::move(perms);
  return TowerSpec(0, {level});
}

// P(O + O(e)) over P^1.
TowerSpec hirzebruch(int e) {
  TowerLevel level;
  level.bundles = {{md({0}), md({e})}};
  return TowerSpec(1, {level});
}

std::map<std::size_t, Int> dims(std::initializer_list<std::pair<const std::size_t, Int>> xs) { return xs; }

}  // namespace

TEST_CASE("P1 x P1 line bundles") {
  // Written both as a fibration over P^1 and as a product over a point.
  TowerLevel trivial;
  trivial.bundles = {{md({0}), md({0})}};
  const TowerSpec over_p1(1, {trivial});
  CHECK(line_bundle_cohomology(over_p1, md({0, 0})) == dims({{0, 1}}));
  CHECK(line_bundle_cohomology(over_p1, md({-1, 0})).empty());
  CHECK(line_bundle_cohomology(over_p1, md({-2, -2})) == dims({{2, 1}}));
  const TowerSpec p1p1 = product(2, 1);
  CHECK(line_bundle_cohomology(p1p1, md({-2, -2})) == dims({{2, 1}}));
  CHECK(line_bundle_cohomology(p1p1, md({2, -3})) == dims({{1, 6}}));
  CHECK_THROWS_AS(line_bundle_cohomology(p1p1, md({0})), RankMismatch);
}

TEST_CASE("products follow Kunneth") {
  for (std::size_t r = 1; r <= 2; ++r) {
    const TowerSpec t = product(3, r);
    for (int a = -4; a <= 2; ++a) {
      for (int b = -4; b <= 2; ++b) {
        for (int c = -4; c <= 2; ++c) {
          const int n = static_cast<int>(r);
          std::map<std::size_t, Int> expected{{0, 1}};
          for (int x : {a, b, c}) {
            std::map<std::size_t, Int> next;
            for (const auto& [i, h] : expected) {
              for (const auto& [j, k] : oracle::projective_space(n, x)) next[i + j] += h * k;
            }
            expected = next;
          }
          std::erase_if(expected, [](const auto& e) { return e.second == 0; });
          CHECK(line_bundle_cohomology(t, md({a, b, c})) == expected);
          Int chi = 1;
          for (int x : {a, b, c}) {
            std::int64_t e = 0;
            for (const auto& [j, k] : oracle::projective_space(n, x)) e += j % 2 ? -k : k;
            chi *= e;
          }
          CHECK(toric_euler(t, md({a, b, c})) == chi);
        }
      }
    }
  }
}

TEST_CASE("trivial bundle over a point reproduces projective space") {
  for (std::size_t r = 1; r <= 4; ++r) {
    const TowerSpec t = product(1, r);
    for (int d = -2 * static_cast<int>(r); d <= 2 * static_cast<int>(r); ++d) {
      std::map<std::size_t, Int> expected;
      for (const auto& [i, h] : oracle::projective_space(static_cast<int>(r), d)) expected[i] = h;
      CHECK(line_bundle_cohomology(t, md({d})) == expected);
    }
  }
}

TEST_CASE("Hirzebruch surfaces match Riemann-Roch") {
  for (int e = 0; e <= 3; ++e) {
    const TowerSpec t = hirzebruch(e);
    for (int a = -4; a <= 4; ++a) {
      for (int b = -4; b <= 4; ++b) CHECK(toric_euler(t, md({a, b})) == oracle::hirzebruch_euler(e, a, b));
    }
  }
  // H^0(F_1, O(h)) = H^0(P^1, O + O(1)).
  CHECK(line_bundle_cohomology(hirzebruch(1), md({0, 1})) == dims({{0, 3}}));
}

TEST_CASE("grid collections") {
  const TowerSpec p2(2, {});
  const auto beilinson = check_grid_collection(p2);
  CHECK(beilinson.overall == Verdict::Confirmed);
  CHECK(beilinson.members == std::vector<MultiDegree>{md({-2}), md({-1}), md({0})});

  for (const TowerSpec& t : {product(2, 1), hirzebruch(1), hirzebruch(2), product(3, 1), product(2, 2)}) {
    const auto r = check_grid_collection(t, 2);
    CHECK(r.overall == Verdict::Confirmed);
    CHECK(Int(r.members.size()) == t.grid_size());
    for (const auto& p : r.pairs) CHECK(p.higher_ext_status != Verdict::Inconclusive);
  }
  CHECK(product(3, 1).grid_size() == 8);
  CHECK(hirzebruch(2).grid_size() == 4);
  CHECK(product(2, 2).grid_size() == 9);

  const auto f1 = check_grid_collection(hirzebruch(1));
  CHECK(f1.members == std::vector<MultiDegree>{md({-1, -1}), md({0, -1}), md({-1, 0}), md({0, 0})});
}

TEST_CASE("Hom points forward along the grid") {
  const auto r = check_grid_collection(product(2, 1));
  bool forward_hom = false;
  for (const auto& p : r.pairs) {
    if (p.source < p.target && p.hom_dim > 0) forward_hom = true;
    if (p.source > p.target) CHECK(p.ext.empty());
  }
  CHECK(forward_hom);
}

TEST_CASE("invalid towers") {
  TowerLevel negative;
  negative.bundles = {{md({0}), md({-1})}};
  CHECK_THROWS_AS(TowerSpec(1, {negative}), InvalidTower);
  TowerLevel ragged;
  ragged.bundles = {{md({0}), md({1})}, {md({0})}};
  CHECK_THROWS_AS(TowerSpec(1, {ragged}), InvalidTower);
  TowerLevel wide;
  wide.bundles = {{md({0, 0}), md({1, 0})}};
  CHECK_THROWS_AS(TowerSpec(1, {wide}), InvalidTower);
  TowerLevel bad_perm;
  bad_perm.bundles = {{md({0}), md({1})}, {md({0}), md({0})}};
  bad_perm.perms = {{1, 0}};
  CHECK_THROWS_AS(TowerSpec(1, {bad_perm}), InvalidTower);
  bad_perm.perms = {{0, 0}};
  CHECK_THROWS_AS(TowerSpec(1, {bad_perm}), InvalidTower);
  TowerLevel empty;
  CHECK_THROWS_AS(TowerSpec(1, {empty}), InvalidTower);
}

TEST_CASE("orbits") {
  const auto swap = galois_orbit_check(product(2, 1, {{1, 0}}));
  CHECK(swap.orbit_closed);
  bool found = false;
  for (const auto& cls : swap.orbit_classes) {
    if (std::find(cls.begin(), cls.end(), md({-1, 0})) != cls.end()) {
      found = true;
      CHECK(std::set<MultiDegree>(cls.begin(), cls.end()) == std::set<MultiDegree>{md({-1, 0}), md({0, -1})});
    }
  }
  CHECK(found);

  const auto trivial = galois_orbit_check(product(2, 1));
  CHECK(trivial.orbit_closed);
  CHECK(trivial.orbit_classes.size() == 4);
  for (const auto& cls : trivial.orbit_classes) CHECK(cls.size() == 1);

  const auto s3 = galois_orbit_check(product(3, 1, {{1, 0, 2}, {1, 2, 0}}));
  CHECK(s3.orbit_closed);
  CHECK(s3.orbit_classes.size() == 4);
  for (const auto& cls : s3.orbit_classes) {
    if (std::find(cls.begin(), cls.end(), md({-1, -1, 0})) != cls.end()) CHECK(cls.size() == 3);
  }

  // Swapping two equal bundles in a level over a positive-dimensional base.
  TowerLevel level;
  level.bundles = {{md({0}), md({1})}, {md({1}), md({0})}};
  level.perms = {{1, 0}};
  const TowerSpec t(1, {level});
  const auto o = galois_orbit_check(t);
  CHECK(o.orbit_closed);
  std::size_t total = 0;
  for (const auto& cls : o.orbit_classes) total += cls.size();
  CHECK(Int(total) == t.grid_size());
  CHECK(check_grid_collection(t).overall == Verdict::Confirmed);
}
