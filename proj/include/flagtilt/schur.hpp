#pragma once

// Rational Schur functors of GL_m: formal characters, Littlewood-Richardson
// products, branching to a Levi subgroup, duals and dimensions.

#include <cstddef>
#include <map>
#include <vector>

#include "flagtilt/integer.hpp"
#include "flagtilt/weights.hpp"

namespace flagtilt {

/// A finite Z-linear combination of irreducible GL_m characters, stored as
/// highest weight -> multiplicity with zero multiplicities removed. Used both
/// for genuine representations and for virtual (Euler) characters.
class CharacterSum {
 public:
  CharacterSum() = default;
  explicit CharacterSum(std::size_t rank) : rank_(rank) {}

  static CharacterSum single(const GLWeight& w, const Int& mult = 1);
  static CharacterSum trivial(std::size_t rank) { return single(GLWeight::zero(rank)); }

  std::size_t rank() const { return rank_; }
  const std::map<GLWeight, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Int multiplicity(const GLWeight& w) const;

  void add(const GLWeight& w, const Int& mult);
  CharacterSum& operator+=(const CharacterSum& other);
  CharacterSum& operator-=(const CharacterSum& other);
  CharacterSum operator-() const;
  CharacterSum scaled(const Int& factor) const;

  /// True when every multiplicity is positive.
  bool is_effective() const;
  /// sum of mult * schur_dim(weight).
  Int dimension() const;

  friend bool operator==(const CharacterSum&, const CharacterSum&) = default;
  friend bool operator<(const CharacterSum& a, const CharacterSum& b) {
    return a.rank_ != b.rank_ ? a.rank_ < b.rank_ : a.terms_ < b.terms_;
  }

 private:
  std::size_t rank_ = 0;
  std::map<GLWeight, Int> terms_;
};

CharacterSum operator+(CharacterSum a, const CharacterSum& b);
CharacterSum operator-(CharacterSum a, const CharacterSum& b);

/// Littlewood-Richardson product of two partitions at GL_m: sum over lambda
/// of c^lambda_{mu,nu} lambda, keeping only lambda with at most m parts.
/// Throws InvalidWeight on a negative entry or a partition longer than m.
CharacterSum lr_coefficients(const GLWeight& mu, const GLWeight& nu, std::size_t rank);

/// Sigma^a (x) Sigma^b for arbitrary full-length GL_m weights, reduced to
/// partitions by determinant shifts.
CharacterSum tensor_schur(const GLWeight& a, const GLWeight& b, std::size_t rank);

/// Bilinear extension of tensor_schur.
CharacterSum tensor(const CharacterSum& a, const CharacterSum& b);

/// Weyl dimension formula for Sigma^lambda(k^m).
Int schur_dim(const GLWeight& lambda, std::size_t rank);

CharacterSum dual_sum(const CharacterSum& s);

/// One summand Sigma^sub(F') (x) Sigma^quot(F'') of a restriction.
struct LeviTerm {
  GLWeight sub;
  GLWeight quot;
  Int mult;
};

/// Restriction of Sigma^alpha from GL_{a+b} to GL_a x GL_b; equivalently the
/// associated graded of Sigma^alpha(F) for 0 -> F' -> F -> F'' -> 0 with
/// rank F' = a, rank F'' = b. Terms are sorted by |quot| so that the
/// sub-heavy pieces come first.
std::vector<LeviTerm> branch_to_levi(const GLWeight& alpha, std::size_t sub_rank,
                                     std::size_t quot_rank);

}  // namespace flagtilt
