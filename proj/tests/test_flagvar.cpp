#include <doctest.h>

#include <set>

#include "flagtilt/error.hpp"
#include "flagtilt/flagvar.hpp"
#include "support/oracles.hpp"

using namespace flagtilt;

namespace {

const FlagShape F123(3, {1, 2});
const FlagShape GR24 = FlagShape::grassmannian(2, 4);

BundleExpr mono(const FlagShape& shape, std::vector<Factor> fs) {
  return BundleExpr::monomial(shape, std::move(fs));
}

GLWeight random_weight(std::size_t rank, int lo, int hi) {
  std::vector<Int> e;
  for (std::size_t i = 0; i < rank; ++i) e.push_back(oracle::uniform(lo, hi));
  std::sort(e.begin(), e.end(), [](const Int& a, const Int& b) { return a > b; });
  return GLWeight(e);
}

// A random monomial on a random slot set of the shape.
BundleExpr random_monomial(const FlagShape& shape) {
  const std::size_t s = shape.steps();
  std::vector<Slot> slots;
  for (std::size_t i = 1; i <= s; ++i) {
    slots.push_back(Slot::sub(i));
    slots.push_back(Slot::quot(i));
  }
  for (std::size_t j = 2; j <= s; ++j) slots.push_back(Slot::block(j));
  BundleExpr e = BundleExpr::trivial(shape);
  const int count = oracle::uniform(1, 2);
  for (int k = 0; k < count; ++k) {
    const Slot slot = slots[oracle::uniform(0, static_cast<int>(slots.size()) - 1)];
    e = tensor(e, mono(shape, {{slot, random_weight(slot_rank(shape, slot), -2, 2)}}));
  }
  return e;
}

}  // namespace

TEST_CASE("shape validation and blocks") {
  CHECK_THROWS_AS(FlagShape(3, {2, 1}), InvalidShape);
  CHECK_THROWS_AS(FlagShape(3, {3}), InvalidShape);
  CHECK_THROWS_AS(FlagShape(0, {}), InvalidShape);
  CHECK(F123.blocks() == std::vector<std::size_t>{1, 1, 1});
  CHECK(FlagShape(5, {1, 3}).blocks() == std::vector<std::size_t>{1, 2, 2});
  CHECK(F123.dimension() == 3);
  CHECK(GR24.dimension() == 4);
  CHECK(F123.is_symmetric());
  CHECK(!FlagShape(4, {1, 2}).is_symmetric());
  CHECK(F123.to_string() == "F(1,2;3)");
}

TEST_CASE("slot ranks") {
  const FlagShape f(5, {1, 3});
  CHECK(slot_rank(f, Slot::sub(2)) == 3);
  CHECK(slot_rank(f, Slot::quot(1)) == 4);
  CHECK(slot_rank(f, Slot::block(2)) == 2);
  CHECK_THROWS_AS(mono(f, {{Slot::sub(1), {1, 0}}}), RankMismatch);
  CHECK_THROWS_AS(mono(f, {{Slot::sub(3), {1, 0}}}), InvalidShape);
}

TEST_CASE("canonical form") {
  // Block(1) is Sub(1) and Block(s+1) is Quot(s).
  CHECK(mono(F123, {{Slot::block(1), {2}}}) == mono(F123, {{Slot::sub(1), {2}}}));
  CHECK(mono(F123, {{Slot::block(3), {1}}}) == mono(F123, {{Slot::quot(2), {1}}}));
  CHECK(mono(F123, {{Slot::sub(1), {0}}}) == BundleExpr::trivial(F123));
  CHECK_THROWS_AS(mono(F123, {{Slot::sub(1), {1}}, {Slot::block(1), {1}}}), Error);
}

TEST_CASE("dual examples") {
  const BundleExpr q2dual = mono(F123, {{Slot::quot(2), {-1}}});
  CHECK(dual(q2dual) == mono(F123, {{Slot::quot(2), {1}}}));
  CHECK(dual(BundleExpr::trivial(F123)) == BundleExpr::trivial(F123));
  CHECK(dual(mono(GR24, {{Slot::sub(1), {2, 0}}})) == mono(GR24, {{Slot::sub(1), {0, -2}}}));
}

TEST_CASE("tensor examples") {
  const BundleExpr w1 = mono(F123, {{Slot::sub(1), {1}}});
  CHECK(tensor(w1, BundleExpr::trivial(F123)) == w1);
  CHECK(tensor(w1, w1) == mono(F123, {{Slot::sub(1), {2}}}));
  const BundleExpr l2 = mono(GR24, {{Slot::sub(1), {1, 1}}});
  const BundleExpr w = mono(GR24, {{Slot::sub(1), {1, 0}}});
  CHECK(tensor(l2, w) == mono(GR24, {{Slot::sub(1), {2, 1}}}));
  CHECK_THROWS_AS(tensor(w1, w), ShapeMismatch);
}

TEST_CASE("sigma pullback examples") {
  const BundleExpr w1 = mono(F123, {{Slot::sub(1), {1}}});
  const BundleExpr w2 = mono(F123, {{Slot::sub(2), {1, 0}}});
  CHECK(sigma_pullback(w1) == mono(F123, {{Slot::quot(2), {-1}}}));
  CHECK(sigma_pullback(tensor(w1, w2)) ==
        mono(F123, {{Slot::quot(2), {-1}}, {Slot::quot(1), {0, -1}}}));
  CHECK_THROWS_AS(sigma_pullback(BundleExpr::trivial(FlagShape(4, {1, 2}))), InvalidShape);
}

TEST_CASE("involutions on random expressions") {
  for (const FlagShape& shape : {F123, GR24, FlagShape(4, {1, 3}), FlagShape(4, {1, 2, 3})}) {
    for (int trial = 0; trial < 25; ++trial) {
      const BundleExpr e = random_monomial(shape) + random_monomial(shape);
      CHECK(dual(dual(e)) == e);
      CHECK(sigma_pullback(sigma_pullback(e)) == e);
      CHECK(dual(sigma_pullback(e)) == sigma_pullback(dual(e)));
      CHECK(dual(e).rank() == e.rank());
      CHECK(sigma_pullback(e).rank() == e.rank());
    }
  }
}

TEST_CASE("minimal base examples") {
  const BundleExpr e = tensor(mono(F123, {{Slot::sub(2), {1, 0}}}), mono(F123, {{Slot::quot(2), {2}}}));
  const BundleExpr r = minimal_base(e);
  CHECK(r.shape() == FlagShape(3, {2}));
  CHECK(r == tensor(mono(r.shape(), {{Slot::sub(1), {1, 0}}}), mono(r.shape(), {{Slot::quot(1), {2}}})));
  const BundleExpr all = tensor(mono(F123, {{Slot::sub(1), {1}}}), mono(F123, {{Slot::sub(2), {1, 0}}}));
  CHECK(minimal_base(all) == all);
  CHECK(minimal_base(BundleExpr::trivial(F123)).shape() == FlagShape(3, {}));
  // A middle block references both of its ends.
  const BundleExpr mid = mono(FlagShape(5, {1, 2, 4}), {{Slot::block(3), {1, 0}}});
  CHECK(minimal_base(mid).shape() == FlagShape(5, {2, 4}));
}

TEST_CASE("graded expansion examples") {
  const auto w1 = graded_expansion(mono(F123, {{Slot::sub(1), {1}}}));
  REQUIRE(w1.size() == 1);
  CHECK(w1[0].monomial.block_weights == std::vector<GLWeight>{{1}, {0}, {0}});
  CHECK(w1[0].multiplicity == 1);

  const auto q1 = graded_expansion(mono(F123, {{Slot::quot(1), {1, 0}}}));
  REQUIRE(q1.size() == 2);
  std::set<std::vector<GLWeight>> blocks;
  for (const auto& p : q1) {
    CHECK(p.multiplicity == 1);
    blocks.insert(p.monomial.block_weights);
  }
  CHECK(blocks == std::set<std::vector<GLWeight>>{{{0}, {1}, {0}}, {{0}, {0}, {1}}});
  CHECK(q1[0].level != q1[1].level);

  // Lambda^2 of Q_1 on F(1,3;4): Lambda^2 of the middle block, and
  // Lambda^1 of it times the last block.
  const FlagShape f(4, {1, 3});
  const auto l2 = graded_expansion(mono(f, {{Slot::quot(1), {1, 1, 0}}}));
  std::set<std::vector<GLWeight>> got;
  for (const auto& p : l2) got.insert(p.monomial.block_weights);
  CHECK(got == std::set<std::vector<GLWeight>>{{{0}, {1, 1}, {0}}, {{0}, {1, 0}, {1}}});
}

TEST_CASE("graded expansion preserves rank") {
  for (const FlagShape& shape : {F123, GR24, FlagShape(4, {1, 3}), FlagShape(5, {1, 3})}) {
    for (int trial = 0; trial < 25; ++trial) {
      const BundleExpr e = random_monomial(shape);
      Int total = 0;
      for (const auto& p : graded_expansion(e)) {
        Int r = p.multiplicity;
        const auto b = shape.blocks();
        for (std::size_t j = 0; j < b.size(); ++j) r *= schur_dim(p.monomial.block_weights[j], b[j]);
        total += r;
      }
      CHECK(total == e.rank());
    }
  }
}

TEST_CASE("graded expansion of a graded expression is the identity") {
  const FlagShape f(4, {1, 3});
  const BundleExpr e = tensor(mono(f, {{Slot::block(2), {2, -1}}}), mono(f, {{Slot::sub(1), {3}}}));
  const auto pieces = graded_expansion(e);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].monomial.block_weights == std::vector<GLWeight>{{3}, {2, -1}, {0}});
}
