#pragma once

// Towers of fibre products of projectivized split bundles over a projective
// space: line-bundle cohomology by iterated pushforward, the grid collection
// and its orbits under permutations of the factors within a level.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "flagtilt/integer.hpp"
#include "flagtilt/kapranov.hpp"

namespace flagtilt {

/// Coordinates on the Picard lattice: (j_0, j_{1,1}, ..., j_{t,m_t}). The base
/// coordinate j_0 is present only when the base is positive-dimensional.
using MultiDegree = std::vector<Int>;

/// m bundles of equal rank r + 1 over the stage below, each a list of line
/// bundle summands, and generators permuting the m factors.
struct TowerLevel {
  std::vector<std::vector<MultiDegree>> bundles;
  std::vector<std::vector<std::size_t>> perms;
};

/// X_0 = P^{base_dim} (a point when base_dim = 0) and
/// X_i = P(E_{i,1}) x_{X_{i-1}} ... x_{X_{i-1}} P(E_{i,m_i}).
/// P(E) is the bundle of rank-one quotients, so p_* O(1) = E.
class TowerSpec {
 public:
  /// Throws InvalidTower on empty or unequal-rank bundles, negative summands,
  /// multidegrees of the wrong length, or invalid permutation generators.
  TowerSpec(std::size_t base_dim, std::vector<TowerLevel> levels);

  std::size_t base_dim() const { return base_dim_; }
  const std::vector<TowerLevel>& levels() const { return levels_; }

  /// Picard rank of X_i (i = 0 is the base).
  std::size_t picard_rank(std::size_t stage) const;
  std::size_t picard_rank() const { return picard_rank(levels_.size()); }
  /// Position of the first coordinate of level i (0-based level index).
  std::size_t offset(std::size_t level) const { return picard_rank(level); }
  /// r_i, the relative dimension of each factor of level i.
  std::size_t fibre_dim(std::size_t level) const;
  std::size_t dimension() const;
  /// (r_0 + 1) * prod (r_i + 1)^{m_i}.
  Int grid_size() const;

  /// Image of d under generator g of level i: the level-i block is permuted,
  /// position k moving to perms[g][k].
  MultiDegree act(std::size_t level, std::size_t generator, const MultiDegree& d) const;

 private:
  std::size_t base_dim_;
  std::vector<TowerLevel> levels_;
};

/// h^i(X, O(d)) for all i with a non-zero value. Throws RankMismatch when d
/// has the wrong length.
std::map<std::size_t, Int> line_bundle_cohomology(const TowerSpec& tower, const MultiDegree& d);

/// sum (-1)^i h^i(X, O(d)).
Int toric_euler(const TowerSpec& tower, const MultiDegree& d);

/// {O(j) : -r_i <= j_i <= 0} in colexicographic order (the last coordinate is
/// the most significant).
std::vector<MultiDegree> grid(const TowerSpec& tower);

struct GridPair {
  std::size_t source = 0;
  std::size_t target = 0;
  std::map<std::size_t, Int> ext;  // Ext^*(O(source), O(target))
  Int hom_dim = 0;
  /// Diagonal: Hom = k. Backward pairs: all Ext vanish. Forward: nullopt.
  std::optional<Verdict> hom_status;
  Verdict higher_ext_status = Verdict::Confirmed;
};

struct GridReport {
  std::vector<MultiDegree> members;
  std::vector<GridPair> pairs;  // row-major over (source, target)
  Verdict overall = Verdict::Confirmed;
};

/// Strong exceptionality of the grid; the computation is exact, so verdicts
/// are Confirmed or Refuted.
GridReport check_grid_collection(const TowerSpec& tower, unsigned jobs = 1);

struct OrbitReport {
  bool orbit_closed = true;
  /// Orbits of the generated group on the grid, each in grid order, ordered
  /// by their first element.
  std::vector<std::vector<MultiDegree>> orbit_classes;
};

OrbitReport galois_orbit_check(const TowerSpec& tower);

}  // namespace flagtilt
