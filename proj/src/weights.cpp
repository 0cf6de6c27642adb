#include "flagtilt/weights.hpp"

#include <algorithm>
#include <numeric>

#include "flagtilt/error.hpp"

namespace flagtilt {

namespace {

std::vector<Int> to_ints(std::initializer_list<long long> entries) {
  return std::vector<Int>(entries.begin(), entries.end());
}

}  // namespace

Weight::Weight(std::initializer_list<long long> entries) : entries_(to_ints(entries)) {}

GLWeight::GLWeight(std::vector<Int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i] < entries_[i + 1]) {
      throw InvalidWeight("GL weight must be weakly decreasing, got increase at position " +
                          std::to_string(i));
    }
  }
}

GLWeight::GLWeight(std::initializer_list<long long> entries) : GLWeight(to_ints(entries)) {}

GLWeight GLWeight::zero(std::size_t rank) { return GLWeight(std::vector<Int>(rank, 0)); }

GLWeight GLWeight::exterior(std::size_t k, std::size_t rank) {
  if (k > rank) throw InvalidWeight("exterior power exceeds rank");
  std::vector<Int> e(rank, 0);
  std::fill(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k), Int(1));
  return GLWeight(std::move(e));
}

GLWeight GLWeight::symmetric(const Int& k, std::size_t rank) {
  if (rank == 0) throw InvalidWeight("symmetric power of a rank-0 bundle");
  if (k < 0) throw InvalidWeight("negative symmetric power");
  std::vector<Int> e(rank, 0);
  e[0] = k;
  return GLWeight(std::move(e));
}

bool GLWeight::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int& x) { return x == 0; });
}

bool GLWeight::is_partition() const { return entries_.empty() || entries_.back() >= 0; }

Int GLWeight::size() const { return std::accumulate(entries_.begin(), entries_.end(), Int(0)); }

GLWeight GLWeight::shifted(const Int& k) const {
  std::vector<Int> e = entries_;
  for (auto& x : e) x += k;
  return GLWeight(std::move(e));
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x : images_) {
    if (x >= images_.size() || seen[x]) throw Error("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw Error("transposition index out of range");
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  std::swap(v[i], v[j]);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Weight rho(std::size_t n) {
  if (n == 0) throw RankMismatch("rho needs rank >= 1");
  std::vector<Int> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = Int(n - i);
  return Weight(std::move(r));
}

Weight dot_action(const Permutation& perm, const Weight& chi) {
  if (perm.size() != chi.rank()) {
    throw RankMismatch("permutation of " + std::to_string(perm.size()) +
                       " letters applied to a rank-" + std::to_string(chi.rank()) + " weight");
  }
  const std::size_t n = chi.rank();
  const Weight r = rho(n);
  std::vector<Int> shifted(n);
  for (std::size_t i = 0; i < n; ++i) shifted[i] = chi[i] + r[i];
  std::vector<Int> moved = perm.apply<Int>(shifted);
  for (std::size_t i = 0; i < n; ++i) moved[i] -= r[i];
  return Weight(std::move(moved));
}

BBWResolution bbw_resolve(const Weight& chi) {
  const std::size_t n = chi.rank();
  if (n == 0) return Regular{0, GLWeight{}};
  const Weight r = rho(n);
  std::vector<Int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = chi[i] + r[i];

  std::vector<Int> sorted = v;
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return Singular{};

  std::size_t inversions = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (v[i] < v[j]) ++inversions;
    }
  }
  for (std::size_t i = 0; i < n; ++i) sorted[i] -= r[i];
  return Regular{inversions, GLWeight(std::move(sorted))};
}

GLWeight dual_weight(const GLWeight& chi) {
  std::vector<Int> e(chi.entries().rbegin(), chi.entries().rend());
  for (auto& x : e) x = -x;
  return GLWeight(std::move(e));
}

Weight concat(std::span<const GLWeight> parts) {
  std::vector<Int> e;
  for (const auto& p : parts) e.insert(e.end(), p.entries().begin(), p.entries().end());
  return Weight(std::move(e));
}

}  // namespace flagtilt
