#include "flagtilt/flagvar.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "flagtilt/concurrent.hpp"
#include "flagtilt/error.hpp"

namespace flagtilt {

FlagShape::FlagShape(std::size_t n, std::vector<std::size_t> dims) : n_(n), dims_(std::move(dims)) {
  if (n_ == 0) throw InvalidShape("ambient dimension must be at least 1");
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 1 || dims_[i] >= n_) {
      throw InvalidShape("flag dimension " + std::to_string(dims_[i]) + " outside [1, " +
                         std::to_string(n_ - 1) + "]");
    }
    if (i > 0 && dims_[i] <= dims_[i - 1]) {
      throw InvalidShape("flag dimensions must be strictly increasing");
    }
  }
}

std::size_t FlagShape::dim(std::size_t i) const {
  if (i == 0) return 0;
  if (i == dims_.size() + 1) return n_;
  if (i > dims_.size() + 1) throw InvalidShape("flag index out of range");
  return dims_[i - 1];
}

std::vector<std::size_t> FlagShape::blocks() const {
  std::vector<std::size_t> b;
  for (std::size_t j = 1; j <= steps() + 1; ++j) b.push_back(block_rank(j));
  return b;
}

bool FlagShape::is_symmetric() const {
  const std::size_t s = steps();
  for (std::size_t i = 0; i < s; ++i) {
    if (dims_[i] + dims_[s - 1 - i] != n_) return false;
  }
  return true;
}

std::size_t FlagShape::dimension() const {
  const auto b = blocks();
  std::size_t total = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) total += b[i] * b[j];
  }
  return total;
}

std::string FlagShape::to_string() const {
  std::ostringstream os;
  os << "F(";
  for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
  os << ";" << n_ << ")";
  return os.str();
}

namespace {

void check_slot(const FlagShape& shape, Slot slot) {
  const std::size_t s = shape.steps();
  const std::size_t limit = slot.kind == SlotKind::Block ? s + 1 : s;
  if (slot.index < 1 || slot.index > limit) {
    throw InvalidShape("slot index " + std::to_string(slot.index) + " out of range for " +
                       shape.to_string());
  }
}

Slot canonical_slot(const FlagShape& shape, Slot slot) {
  const std::size_t s = shape.steps();
  if (slot.kind == SlotKind::Block && s >= 1) {
    if (slot.index == 1) return Slot::sub(1);
    if (slot.index == s + 1) return Slot::quot(s);
  }
  return slot;
}

std::string weight_text(const GLWeight& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.rank(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

}  // namespace

std::size_t slot_rank(const FlagShape& shape, Slot slot) {
  check_slot(shape, slot);
  switch (slot.kind) {
    case SlotKind::Sub:
      return shape.dim(slot.index);
    case SlotKind::Quot:
      return shape.n() - shape.dim(slot.index);
    case SlotKind::Block:
      return shape.block_rank(slot.index);
  }
  return 0;
}

std::pair<std::size_t, std::size_t> slot_blocks(const FlagShape& shape, Slot slot) {
  check_slot(shape, slot);
  switch (slot.kind) {
    case SlotKind::Sub:
      return {1, slot.index};
    case SlotKind::Quot:
      return {slot.index + 1, shape.steps() + 1};
    case SlotKind::Block:
      return {slot.index, slot.index};
  }
  return {0, 0};
}

std::string slot_name(const FlagShape& shape, Slot slot) {
  check_slot(shape, slot);
  switch (slot.kind) {
    case SlotKind::Sub:
      return "W" + std::to_string(shape.dim(slot.index));
    case SlotKind::Quot:
      return "Q" + std::to_string(shape.dim(slot.index));
    case SlotKind::Block: {
      const std::size_t hi = shape.dim(slot.index);
      const std::size_t lo = shape.dim(slot.index - 1);
      const std::string top = hi == shape.n() ? "V" : "W" + std::to_string(hi);
      return lo == 0 ? top : top + "/W" + std::to_string(lo);
    }
  }
  return {};
}

SchurMonomial::SchurMonomial(const FlagShape& shape, std::vector<Factor> factors) {
  for (auto& f : factors) {
    check_slot(shape, f.slot);
    if (f.weight.rank() != slot_rank(shape, f.slot)) {
      throw RankMismatch("weight " + weight_text(f.weight) + " on slot " +
                         slot_name(shape, f.slot) + " of rank " +
                         std::to_string(slot_rank(shape, f.slot)));
    }
    f.slot = canonical_slot(shape, f.slot);
  }
  std::erase_if(factors, [](const Factor& f) { return f.weight.is_zero(); });
  std::sort(factors.begin(), factors.end());
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    if (factors[i].slot == factors[i + 1].slot) {
      throw Error("slot " + slot_name(shape, factors[i].slot) +
                  " occurs twice in a monomial; merge the factors with tensor first");
    }
  }
  factors_ = std::move(factors);
}

BundleExpr BundleExpr::trivial(const FlagShape& shape) {
  BundleExpr e(shape);
  e.add(SchurMonomial(shape, {}), 1);
  return e;
}

BundleExpr BundleExpr::monomial(const FlagShape& shape, std::vector<Factor> factors,
                                const Int& mult) {
  BundleExpr e(shape);
  e.add(SchurMonomial(shape, std::move(factors)), mult);
  return e;
}

void BundleExpr::add(const SchurMonomial& m, const Int& mult) {
  if (mult < 0) throw Error("bundle multiplicities must be non-negative");
  if (mult == 0) return;
  terms_[m] += mult;
}

BundleExpr& BundleExpr::operator+=(const BundleExpr& other) {
  if (other.shape_ != shape_) throw ShapeMismatch("direct sum of bundles on different shapes");
  for (const auto& [m, k] : other.terms_) add(m, k);
  return *this;
}

BundleExpr operator+(BundleExpr a, const BundleExpr& b) { return a += b; }

Int BundleExpr::rank() const {
  Int total = 0;
  for (const auto& [m, k] : terms_) {
    Int r = k;
    for (const auto& f : m.factors()) r *= schur_dim(f.weight, slot_rank(shape_, f.slot));
    total += r;
  }
  return total;
}

std::vector<BundleExpr> BundleExpr::summands() const {
  std::vector<BundleExpr> out;
  for (const auto& [m, k] : terms_) {
    BundleExpr e(shape_);
    e.add(m, 1);
    out.push_back(std::move(e));
  }
  return out;
}

std::string BundleExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, k] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (k != 1) os << k << "*";
    if (m.is_trivial()) {
      os << "O";
      continue;
    }
    for (std::size_t i = 0; i < m.factors().size(); ++i) {
      const auto& f = m.factors()[i];
      os << (i ? " x " : "") << "S" << weight_text(f.weight) << "(" << slot_name(shape_, f.slot)
         << ")";
    }
  }
  return os.str();
}

BundleExpr dual(const BundleExpr& e) {
  BundleExpr out(e.shape());
  for (const auto& [m, k] : e.terms()) {
    std::vector<Factor> fs;
    for (const auto& f : m.factors()) fs.push_back({f.slot, dual_weight(f.weight)});
    out.add(SchurMonomial(e.shape(), std::move(fs)), k);
  }
  return out;
}

namespace {

// Product of two canonical monomials as a sum of monomials.
std::vector<std::pair<std::vector<Factor>, Int>> multiply(const FlagShape& shape,
                                                          const SchurMonomial& a,
                                                          const SchurMonomial& b) {
  std::vector<std::pair<std::vector<Factor>, Int>> partial{{{}, 1}};
  auto fa = a.factors().begin();
  auto fb = b.factors().begin();
  while (fa != a.factors().end() || fb != b.factors().end()) {
    const bool take_a = fb == b.factors().end() ||
                        (fa != a.factors().end() && fa->slot < fb->slot);
    const bool take_b = fa == a.factors().end() ||
                        (fb != b.factors().end() && fb->slot < fa->slot);
    if (take_a || take_b) {
      const Factor& f = take_a ? *fa++ : *fb++;
      for (auto& p : partial) p.first.push_back(f);
      continue;
    }
    const Slot slot = fa->slot;
    const CharacterSum merged = tensor_schur(fa->weight, fb->weight, slot_rank(shape, slot));
    ++fa;
    ++fb;
    std::vector<std::pair<std::vector<Factor>, Int>> next;
    for (const auto& p : partial) {
      for (const auto& [w, k] : merged.terms()) {
        auto fs = p.first;
        fs.push_back({slot, w});
        next.emplace_back(std::move(fs), p.second * k);
      }
    }
    partial = std::move(next);
  }
  return partial;
}

}  // namespace

BundleExpr tensor(const BundleExpr& a, const BundleExpr& b) {
  if (a.shape() != b.shape()) {
    throw ShapeMismatch("tensor of bundles on " + a.shape().to_string() + " and " +
                        b.shape().to_string());
  }
  BundleExpr out(a.shape());
  for (const auto& [ma, ka] : a.terms()) {
    for (const auto& [mb, kb] : b.terms()) {
      for (auto& [fs, k] : multiply(a.shape(), ma, mb)) {
        out.add(SchurMonomial(a.shape(), std::move(fs)), k * ka * kb);
      }
    }
  }
  return out;
}

BundleExpr sigma_pullback(const BundleExpr& e) {
  const FlagShape& shape = e.shape();
  if (!shape.is_symmetric()) {
    throw InvalidShape(shape.to_string() + " has no duality automorphism (d_i + d_{s-i+1} != n)");
  }
  const std::size_t s = shape.steps();
  BundleExpr out(shape);
  for (const auto& [m, k] : e.terms()) {
    std::vector<Factor> fs;
    for (const auto& f : m.factors()) {
      Slot image = f.slot;
      switch (f.slot.kind) {
        case SlotKind::Sub:
          image = Slot::quot(s - f.slot.index + 1);
          break;
        case SlotKind::Quot:
          image = Slot::sub(s - f.slot.index + 1);
          break;
        case SlotKind::Block:
          image = Slot::block(s + 2 - f.slot.index);
          break;
      }
      fs.push_back({image, dual_weight(f.weight)});
    }
    out.add(SchurMonomial(shape, std::move(fs)), k);
  }
  return out;
}

BundleExpr minimal_base(const BundleExpr& e) {
  const FlagShape& shape = e.shape();
  const std::size_t s = shape.steps();
  std::set<std::size_t> used;  // 1-based step indices
  for (const auto& [m, k] : e.terms()) {
    for (const auto& f : m.factors()) {
      if (f.slot.kind == SlotKind::Block) {
        if (f.slot.index >= 2) used.insert(f.slot.index - 1);
        if (f.slot.index <= s) used.insert(f.slot.index);
      } else {
        used.insert(f.slot.index);
      }
    }
  }
  std::vector<std::size_t> dims;
  std::vector<std::size_t> renumber(s + 2, 0);
  for (std::size_t i : used) {
    dims.push_back(shape.dim(i));
    renumber[i] = dims.size();
  }
  FlagShape reduced(shape.n(), dims);
  BundleExpr out(reduced);
  for (const auto& [m, k] : e.terms()) {
    std::vector<Factor> fs;
    for (const auto& f : m.factors()) {
      Slot image = f.slot;
      if (f.slot.kind == SlotKind::Block) {
        image.index = f.slot.index <= s ? renumber[f.slot.index] : dims.size() + 1;
      } else {
        image.index = renumber[f.slot.index];
      }
      fs.push_back({image, f.weight});
    }
    out.add(SchurMonomial(reduced, std::move(fs)), k);
  }
  return out;
}

namespace {

using LevelKey = std::vector<Int>;

struct RawPiece {
  std::vector<GLWeight> blocks;  // one weight per block of the whole shape
  Int mult;
  LevelKey level;
};

// Associated graded of Sigma^alpha on the blocks [lo, hi], splitting off the
// last block as the quotient at each step.
std::vector<RawPiece> expand_slot(const FlagShape& shape, const GLWeight& alpha, std::size_t lo,
                                  std::size_t hi) {
  const std::size_t nblocks = shape.steps() + 1;
  if (lo == hi) {
    std::vector<GLWeight> bw;
    for (std::size_t j = 1; j <= nblocks; ++j) {
      bw.push_back(j == lo ? alpha : GLWeight::zero(shape.block_rank(j)));
    }
    return {RawPiece{std::move(bw), 1, {}}};
  }
  const std::size_t quot_rank = shape.block_rank(hi);
  const std::size_t sub_rank = alpha.rank() - quot_rank;
  std::vector<RawPiece> out;
  for (const auto& term : branch_to_levi(alpha, sub_rank, quot_rank)) {
    for (auto& piece : expand_slot(shape, term.sub, lo, hi - 1)) {
      piece.blocks[hi - 1] = term.quot;
      piece.mult *= term.mult;
      piece.level.insert(piece.level.begin(), term.quot.size());
      out.push_back(std::move(piece));
    }
  }
  return out;
}

std::vector<RawPiece> expand_monomial(const FlagShape& shape, const SchurMonomial& m) {
  const std::size_t nblocks = shape.steps() + 1;
  std::map<std::pair<std::vector<GLWeight>, LevelKey>, Int> acc;
  {
    std::vector<GLWeight> zero;
    for (std::size_t j = 1; j <= nblocks; ++j) zero.push_back(GLWeight::zero(shape.block_rank(j)));
    acc[{zero, {}}] = 1;
  }
  for (const auto& f : m.factors()) {
    const auto [lo, hi] = slot_blocks(shape, f.slot);
    const auto pieces = expand_slot(shape, f.weight, lo, hi);
    std::map<std::pair<std::vector<GLWeight>, LevelKey>, Int> next;
    for (const auto& [key, mult] : acc) {
      for (const auto& piece : pieces) {
        LevelKey level = key.second;
        level.insert(level.end(), piece.level.begin(), piece.level.end());
        // Blockwise tensor product; only blocks in [lo, hi] change.
        std::vector<std::pair<std::vector<GLWeight>, Int>> partial{{key.first, mult * piece.mult}};
        for (std::size_t j = lo; j <= hi; ++j) {
          const std::size_t r = shape.block_rank(j);
          std::vector<std::pair<std::vector<GLWeight>, Int>> grown;
          for (const auto& [bw, k] : partial) {
            const CharacterSum product = tensor_schur(bw[j - 1], piece.blocks[j - 1], r);
            for (const auto& [w, c] : product.terms()) {
              auto nbw = bw;
              nbw[j - 1] = w;
              grown.emplace_back(std::move(nbw), k * c);
            }
          }
          partial = std::move(grown);
        }
        for (auto& [bw, k] : partial) next[{std::move(bw), level}] += k;
      }
    }
    acc = std::move(next);
  }
  std::vector<RawPiece> out;
  for (auto& [key, mult] : acc) out.push_back(RawPiece{key.first, mult, key.second});
  return out;
}

ConcurrentCache<std::pair<FlagShape, SchurMonomial>, std::vector<RawPiece>>& expansion_cache() {
  static ConcurrentCache<std::pair<FlagShape, SchurMonomial>, std::vector<RawPiece>> cache;
  return cache;
}

}  // namespace

std::vector<GradedPiece> graded_expansion(const BundleExpr& e) {
  std::map<std::pair<LevelKey, GradedMonomial>, Int> merged;
  for (const auto& [m, k] : e.terms()) {
    const auto pieces = expansion_cache().get_or_compute(
        {e.shape(), m}, [&] { return expand_monomial(e.shape(), m); });
    for (const auto& p : pieces) merged[{p.level, GradedMonomial{p.blocks}}] += p.mult * k;
  }
  std::vector<GradedPiece> out;
  std::size_t level = 0;
  const LevelKey* previous = nullptr;
  for (const auto& [key, mult] : merged) {
    if (previous != nullptr && *previous != key.first) ++level;
    previous = &key.first;
    out.push_back(GradedPiece{key.second, mult, level});
  }
  return out;
}

}  // namespace flagtilt
