#pragma once

// Integer weights of GL_n, the rho-shifted ("dot") Weyl group action, and the
// Borel-Bott-Weil resolution of a line-bundle weight on a full flag bundle.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

#include "flagtilt/integer.hpp"

namespace flagtilt {

/// An arbitrary character of the diagonal torus of GL_n.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Int> entries) : entries_(std::move(entries)) {}
  Weight(std::initializer_list<long long> entries);

  std::size_t rank() const { return entries_.size(); }
  const std::vector<Int>& entries() const { return entries_; }
  const Int& operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Int> entries_;
};

/// A weakly decreasing weight: the highest weight of an irreducible rational
/// GL_m representation, i.e. the index of a Schur functor. Throws
/// InvalidWeight if the entries increase anywhere.
class GLWeight {
 public:
  GLWeight() = default;
  explicit GLWeight(std::vector<Int> entries);
  GLWeight(std::initializer_list<long long> entries);

  static GLWeight zero(std::size_t rank);
  /// (1^k, 0^(rank-k)), the highest weight of the k-th exterior power.
  static GLWeight exterior(std::size_t k, std::size_t rank);
  /// (k, 0, ..., 0), the highest weight of the k-th symmetric power.
  static GLWeight symmetric(const Int& k, std::size_t rank);

  std::size_t rank() const { return entries_.size(); }
  const std::vector<Int>& entries() const { return entries_; }
  const Int& operator[](std::size_t i) const { return entries_[i]; }

  bool is_zero() const;
  /// Non-negative (a partition, possibly with trailing zeros).
  bool is_partition() const;
  /// Sum of entries.
  Int size() const;
  /// Adds k to every entry (tensoring with det^k).
  GLWeight shifted(const Int& k) const;

  Weight as_weight() const { return Weight(entries_); }

  friend bool operator==(const GLWeight&, const GLWeight&) = default;
  friend bool operator<(const GLWeight& a, const GLWeight& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Int> entries_;
};

/// A permutation of {0, ..., n-1}. Applied to a vector it sends the entry at
/// position i to position image(i).
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  /// Transposition of the 0-based positions i and j.
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  bool is_identity() const;

  template <class T>
  std::vector<T> apply(std::span<const T> v) const {
    std::vector<T> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[images_[i]] = v[i];
    return out;
  }

 private:
  std::vector<std::size_t> images_;
};

/// rho = (n, n-1, ..., 1).
Weight rho(std::size_t n);

/// perm . chi = perm(chi + rho) - rho. Throws RankMismatch.
Weight dot_action(const Permutation& perm, const Weight& chi);

/// chi + rho contains a repeated entry.
struct Singular {
  friend bool operator==(const Singular&, const Singular&) = default;
};

/// R^degree pi_* O(chi) is the only non-zero direct image; it equals the dual
/// of Sigma^dominant(V), i.e. Sigma^{dual_weight(dominant)}(V).
struct Regular {
  std::size_t degree = 0;
  GLWeight dominant;
  friend bool operator==(const Regular&, const Regular&) = default;
};

using BBWResolution = std::variant<Singular, Regular>;

/// Borel-Bott-Weil: if chi + rho has a repeat the weight is singular;
/// otherwise degree is the number of inversions of the permutation sorting
/// chi + rho into strictly decreasing order and dominant = sorted - rho.
BBWResolution bbw_resolve(const Weight& chi);

/// (a_1, ..., a_m) -> (-a_m, ..., -a_1); the highest weight of the dual.
GLWeight dual_weight(const GLWeight& chi);

/// Concatenation of weights (used to assemble a full-flag weight from blocks).
Weight concat(std::span<const GLWeight> parts);

}  // namespace flagtilt
