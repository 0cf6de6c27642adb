#pragma once

// Partial flag varieties F(d_1, ..., d_s; V) and formal homogeneous bundles
// built from Schur functors of the tautological bundles.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "flagtilt/integer.hpp"
#include "flagtilt/schur.hpp"
#include "flagtilt/weights.hpp"

namespace flagtilt {

/// F(d_1 < ... < d_s; k^n). An empty dims list is the point.
class FlagShape {
 public:
  FlagShape(std::size_t n, std::vector<std::size_t> dims);

  /// The Grassmannian Gr(k, n).
  static FlagShape grassmannian(std::size_t k, std::size_t n) { return FlagShape(n, {k}); }

  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  /// s, the number of steps.
  std::size_t steps() const { return dims_.size(); }
  /// d_i for 1 <= i <= s, with d_0 = 0 and d_{s+1} = n.
  std::size_t dim(std::size_t i) const;
  /// The composition (d_1, d_2 - d_1, ..., n - d_s).
  std::vector<std::size_t> blocks() const;
  std::size_t block_rank(std::size_t j) const { return dim(j) - dim(j - 1); }
  /// d_i + d_{s-i+1} = n for all i: the shape admits the duality automorphism.
  bool is_symmetric() const;
  /// Dimension of the variety, sum over block pairs of products of sizes.
  std::size_t dimension() const;

  std::string to_string() const;

  friend bool operator==(const FlagShape&, const FlagShape&) = default;
  friend bool operator<(const FlagShape& a, const FlagShape& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.dims_ < b.dims_;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> dims_;
};

/// Sub(i) = W_{d_i}, Block(j) = W_{d_j}/W_{d_{j-1}}, Quot(i) = V/W_{d_i}.
/// Indices are 1-based. The enumerator order is the canonical slot order.
enum class SlotKind { Sub, Block, Quot };

struct Slot {
  SlotKind kind;
  std::size_t index;

  static Slot sub(std::size_t i) { return {SlotKind::Sub, i}; }
  static Slot block(std::size_t j) { return {SlotKind::Block, j}; }
  static Slot quot(std::size_t i) { return {SlotKind::Quot, i}; }

  friend auto operator<=>(const Slot&, const Slot&) = default;
};

std::size_t slot_rank(const FlagShape& shape, Slot slot);
/// The blocks [first, last] (1-based, inclusive) whose graded pieces make up
/// the slot's bundle.
std::pair<std::size_t, std::size_t> slot_blocks(const FlagShape& shape, Slot slot);
std::string slot_name(const FlagShape& shape, Slot slot);

struct Factor {
  Slot slot;
  GLWeight weight;

  friend bool operator==(const Factor&, const Factor&) = default;
  friend bool operator<(const Factor& a, const Factor& b) {
    if (a.slot != b.slot) return a.slot < b.slot;
    return a.weight < b.weight;
  }
};

/// A tensor product of Schur functors of distinct tautological slots, kept in
/// canonical form: factors sorted by slot, trivial factors dropped, and
/// Block(1) / Block(s+1) rewritten as Sub(1) / Quot(s).
class SchurMonomial {
 public:
  SchurMonomial() = default;
  /// Validates ranks against the shape and canonicalizes. Throws if a slot
  /// occurs twice after canonicalization.
  SchurMonomial(const FlagShape& shape, std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_trivial() const { return factors_.empty(); }

  friend bool operator==(const SchurMonomial&, const SchurMonomial&) = default;
  friend bool operator<(const SchurMonomial& a, const SchurMonomial& b) {
    return a.factors_ < b.factors_;
  }

 private:
  std::vector<Factor> factors_;
};

/// A direct sum of Schur monomials with non-negative multiplicities.
class BundleExpr {
 public:
  explicit BundleExpr(FlagShape shape) : shape_(std::move(shape)) {}

  static BundleExpr trivial(const FlagShape& shape);
  static BundleExpr monomial(const FlagShape& shape, std::vector<Factor> factors,
                             const Int& mult = 1);

  const FlagShape& shape() const { return shape_; }
  const std::map<SchurMonomial, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const SchurMonomial& m, const Int& mult);
  BundleExpr& operator+=(const BundleExpr& other);

  /// Rank of the bundle.
  Int rank() const;
  /// Each monomial as its own expression with multiplicity one.
  std::vector<BundleExpr> summands() const;

  std::string to_string() const;

  friend bool operator==(const BundleExpr&, const BundleExpr&) = default;

 private:
  FlagShape shape_;
  std::map<SchurMonomial, Int> terms_;
};

BundleExpr operator+(BundleExpr a, const BundleExpr& b);

BundleExpr dual(const BundleExpr& e);
BundleExpr tensor(const BundleExpr& a, const BundleExpr& b);
/// Pullback along the duality automorphism of a symmetric shape:
/// W_{d_i} -> Q_{d_{s-i+1}}^dual. Throws InvalidShape otherwise.
BundleExpr sigma_pullback(const BundleExpr& e);
/// The same bundle pulled back from the smallest flag variety that carries it.
BundleExpr minimal_base(const BundleExpr& e);

/// A Schur functor on each graded block W_{d_j}/W_{d_{j-1}}.
struct GradedMonomial {
  std::vector<GLWeight> block_weights;

  friend bool operator==(const GradedMonomial&, const GradedMonomial&) = default;
  friend bool operator<(const GradedMonomial& a, const GradedMonomial& b) {
    return a.block_weights < b.block_weights;
  }
};

/// level orders the pieces of the filtration: lower levels sit deeper on the
/// subbundle side.
struct GradedPiece {
  GradedMonomial monomial;
  Int multiplicity;
  std::size_t level;

  friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

/// The associated graded of e for the filtration induced by the tautological
/// flag, as block-graded monomials with Littlewood-Richardson multiplicities.
std::vector<GradedPiece> graded_expansion(const BundleExpr& e);

}  // namespace flagtilt
