#pragma once

// Cohomology of homogeneous bundles on partial flag varieties: exact
// Borel-Bott-Weil on block-graded pieces, assembled over the associated
// graded of the tautological filtration.

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "flagtilt/flagvar.hpp"
#include "flagtilt/schur.hpp"
#include "flagtilt/weights.hpp"

namespace flagtilt {

/// How much of a CohomologyOutcome is certified.
///   Exact     - by_degree is the cohomology.
///   E1Bound   - by_degree is the E1 page of the filtration spectral sequence
///               (an upper bound per degree); euler is still exact.
///   EulerOnly - only euler was requested; by_degree is empty.
enum class Grade { Exact, E1Bound, EulerOnly };

std::string_view grade_name(Grade g);

struct CohomologyOutcome {
  std::size_t rank = 0;  // n, the rank of V
  std::map<std::size_t, CharacterSum> by_degree;
  Grade grade = Grade::Exact;
  CharacterSum euler;

  /// by_degree[t], or the empty character.
  CharacterSum at(std::size_t degree) const;
  /// Degrees with a non-zero entry.
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const CohomologyOutcome&, const CohomologyOutcome&) = default;
};

/// H^degree = Sigma^weight(V), all other degrees zero.
struct CohomologyTerm {
  std::size_t degree = 0;
  GLWeight weight;
  friend bool operator==(const CohomologyTerm&, const CohomologyTerm&) = default;
};

/// Cohomology of a block-graded monomial. nullopt means everything vanishes.
std::optional<CohomologyTerm> cohomology_graded(const GradedMonomial& gm, const FlagShape& shape);

struct CohomologyOptions {
  /// Push each summand down to the smallest flag variety carrying it first.
  bool reduce_to_minimal_base = true;
  /// Forget a step d_i whenever only the graded blocks next to it carry
  /// factors: the fibre is a relative Grassmannian and the direct image is a
  /// single Schur functor. When false, only the filtration E1 page is used.
  bool use_pushforward = true;
};

/// Per summand: exact when it is computed by pushforwards alone or when its
/// E1 page has no two adjacent occupied degrees. The outcome is Exact iff
/// every summand is and no two occupied degrees of the total are adjacent;
/// otherwise E1Bound, with by_degree an upper bound degree by degree.
CohomologyOutcome cohomology(const BundleExpr& e, CohomologyOptions options = {});

/// Ext^*(a, b) = H^*(a^dual (x) b).
CohomologyOutcome ext_groups(const BundleExpr& a, const BundleExpr& b);

/// Alternating sum of the cohomology; exact at every grade.
CharacterSum euler_characteristic(const BundleExpr& e);

/// An outcome carrying only the Euler character (grade EulerOnly).
CohomologyOutcome euler_outcome(const BundleExpr& e);

/// One piece of the associated graded together with its own cohomology.
struct PieceCohomology {
  FlagShape shape;  // the (possibly reduced) shape the piece lives on
  GradedPiece piece;
  std::optional<CohomologyTerm> term;
};

/// The E1 data behind cohomology(e): every graded piece and its cohomology.
std::vector<PieceCohomology> e1_pieces(const BundleExpr& e, CohomologyOptions options = {});

/// Rp_* (Sigma^alpha(W) (x) Sigma^beta(V/W)) for the relative Grassmannian
/// Gr(len(alpha), V) over a base, V of rank m.
std::optional<CohomologyTerm> pushforward_grassmann(const GLWeight& alpha, const GLWeight& beta,
                                                    std::size_t m);

}  // namespace flagtilt
