#pragma once

// Kapranov's exceptional collection on a partial flag variety and a
// three-valued checker for (strong) exceptionality of ordered bundle lists.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "flagtilt/cohomology.hpp"
#include "flagtilt/flagvar.hpp"

namespace flagtilt {

struct Collection {
  FlagShape shape;
  std::vector<BundleExpr> members;
};

/// Partitions inside a rows x cols box, as weights of length rows.
std::vector<GLWeight> box_partitions(std::size_t rows, std::size_t cols);

/// n! / prod(block sizes)!, the rank of K_0 of the flag variety.
Int expected_collection_size(const FlagShape& shape);

/// All Sigma^{a_1}(W_{d_1}) (x) ... (x) Sigma^{a_s}(W_{d_s}) with a_r in the
/// d_r x (d_{r+1} - d_r) box. Ordered by decreasing (|a_1|, ..., |a_s|),
/// ties by decreasing (a_1, ..., a_s); the fibre direction of the tower of
/// Grassmann bundles is the most significant key.
Collection enumerate_collection(const FlagShape& shape);

enum class Verdict { Confirmed, Refuted, Inconclusive };

std::string_view verdict_name(Verdict v);

/// Refuted dominates Inconclusive dominates Confirmed.
Verdict combine(Verdict a, Verdict b);

/// Evidence that a vanishing condition fails: either an exact non-zero
/// cohomology group, or an Euler character no vanishing pattern can produce.
struct Witness {
  enum class Kind { ExactDegree, Euler };
  Kind kind = Kind::ExactDegree;
  std::size_t degree = 0;  // meaningful for ExactDegree
  CharacterSum character;
};

struct ConditionStatus {
  Verdict verdict = Verdict::Confirmed;
  std::optional<Witness> witness;               // set iff Refuted
  std::map<std::size_t, CharacterSum> bound;    // E1 entries left open when Inconclusive
};

/// Ext^m = 0 for all m > 0.
ConditionStatus classify_higher_vanishing(const CohomologyOutcome& ext);
/// Ext^m = 0 for all m.
ConditionStatus classify_total_vanishing(const CohomologyOutcome& ext);
/// Hom = k (the trivial character with multiplicity one).
ConditionStatus classify_scalar_endomorphisms(const CohomologyOutcome& ext);

enum class Condition { HigherVanishing, TotalVanishing };

/// Re-derives the witness from the outcome; reports only sound refutations.
bool witness_is_sound(const CohomologyOutcome& ext, const Witness& w, Condition condition);

/// Ext^*(members[source], members[target]).
struct PairVerdict {
  std::size_t source = 0;
  std::size_t target = 0;
  CohomologyOutcome ext;
  CharacterSum hom_character;
  /// Backward pairs (source > target) must have no Ext at all; the diagonal
  /// must have Hom = k; forward pairs have no Hom requirement (nullopt).
  std::optional<ConditionStatus> hom_status;
  ConditionStatus higher_ext_status;
};

struct PairReport {
  std::vector<PairVerdict> pairs;  // row-major over (source, target)
  Verdict overall = Verdict::Confirmed;

  const PairVerdict& at(std::size_t source, std::size_t target) const;
  std::size_t size() const;  // number of members
};

/// Throws Error on an empty list, ShapeMismatch on mixed shapes.
PairReport check_strong_exceptional(std::span<const BundleExpr> members, unsigned jobs = 1);

struct HomQuiver {
  std::vector<std::vector<CharacterSum>> characters;  // [source][target], degree 0
  std::vector<std::vector<Int>> dims;
  std::vector<std::vector<Grade>> grades;
};

HomQuiver hom_quiver(const Collection& c, unsigned jobs = 1);

}  // namespace flagtilt
