#include "flagtilt/cohomology.hpp"

#include <iterator>

#include "flagtilt/concurrent.hpp"
#include "flagtilt/error.hpp"

namespace flagtilt {

std::string_view grade_name(Grade g) {
  switch (g) {
    case Grade::Exact:
      return "exact";
    case Grade::E1Bound:
      return "e1bound";
    case Grade::EulerOnly:
      return "euler_only";
  }
  return "?";
}

CharacterSum CohomologyOutcome::at(std::size_t degree) const {
  auto it = by_degree.find(degree);
  return it == by_degree.end() ? CharacterSum(rank) : it->second;
}

std::vector<std::size_t> CohomologyOutcome::degrees() const {
  std::vector<std::size_t> out;
  for (const auto& [t, c] : by_degree) {
    if (!c.empty()) out.push_back(t);
  }
  return out;
}

namespace {

std::optional<CohomologyTerm> resolve(std::span<const GLWeight> blocks) {
  std::vector<GLWeight> dualized;
  dualized.reserve(blocks.size());
  for (const auto& b : blocks) dualized.push_back(dual_weight(b));
  const BBWResolution r = bbw_resolve(concat(dualized));
  if (std::holds_alternative<Singular>(r)) return std::nullopt;
  const auto& regular = std::get<Regular>(r);
  return CohomologyTerm{regular.degree, dual_weight(regular.dominant)};
}

using E1Page = std::map<std::size_t, CharacterSum>;

struct Resolved {
  E1Page page;
  bool exact = true;
};

bool has_adjacent_degrees(const E1Page& page) {
  for (auto it = page.begin(); it != page.end(); ++it) {
    auto next = std::next(it);
    if (next != page.end() && next->first == it->first + 1) return true;
  }
  return false;
}

// Differentials of the filtration spectral sequence raise the degree by one,
// so with no two occupied degrees adjacent the E1 page is the answer.
Resolved monomial_e1(const FlagShape& shape, const SchurMonomial& m) {
  BundleExpr single(shape);
  single.add(m, 1);
  Resolved r;
  for (const auto& piece : graded_expansion(single)) {
    if (auto term = cohomology_graded(piece.monomial, shape)) {
      auto [it, inserted] = r.page.try_emplace(term->degree, CharacterSum(shape.n()));
      it->second.add(term->weight, piece.multiplicity);
    }
  }
  std::erase_if(r.page, [](const auto& entry) { return entry.second.empty(); });
  r.exact = !has_adjacent_degrees(r.page);
  return r;
}

// The graded block index of a factor, if it is one (Sub(1) and Quot(s) are
// the outer blocks).
std::optional<std::size_t> as_block(const Factor& f, std::size_t s) {
  if (f.slot.kind == SlotKind::Block) return f.slot.index;
  if (f.slot.kind == SlotKind::Sub && f.slot.index == 1) return 1;
  if (f.slot.kind == SlotKind::Quot && f.slot.index == s) return s + 1;
  return std::nullopt;
}

bool involves_step(const Factor& f, std::size_t i, std::size_t s) {
  if (auto b = as_block(f, s)) return *b == i || *b == i + 1;
  return f.slot.index == i;
}

// A step whose factors are all graded blocks adjacent to it.
std::optional<std::size_t> pushable_step(const FlagShape& shape, const SchurMonomial& m) {
  const std::size_t s = shape.steps();
  for (std::size_t i = 1; i <= s; ++i) {
    bool ok = true;
    for (const auto& f : m.factors()) {
      if (involves_step(f, i, s) && !as_block(f, s)) ok = false;
    }
    if (ok) return i;
  }
  return std::nullopt;
}

Resolved resolve_monomial(const FlagShape& shape, const SchurMonomial& m, bool push);

ConcurrentCache<std::tuple<FlagShape, SchurMonomial, bool>, Resolved>& monomial_cache() {
  static ConcurrentCache<std::tuple<FlagShape, SchurMonomial, bool>, Resolved> cache;
  return cache;
}

Resolved cached_monomial(const FlagShape& shape, const SchurMonomial& m, bool push) {
  return monomial_cache().get_or_compute({shape, m, push},
                                         [&] { return resolve_monomial(shape, m, push); });
}

Resolved push_step(const FlagShape& shape, const SchurMonomial& m, std::size_t i) {
  const std::size_t s = shape.steps();
  GLWeight alpha = GLWeight::zero(shape.block_rank(i));
  GLWeight beta = GLWeight::zero(shape.block_rank(i + 1));
  std::vector<Factor> rest;
  for (const auto& f : m.factors()) {
    const auto b = as_block(f, s);
    if (b && *b == i) {
      alpha = f.weight;
    } else if (b && *b == i + 1) {
      beta = f.weight;
    } else {
      Factor g = f;
      const std::size_t cut = f.slot.kind == SlotKind::Block ? i + 1 : i;
      if (f.slot.index > cut) --g.slot.index;
      rest.push_back(std::move(g));
    }
  }
  const auto term = pushforward_grassmann(alpha, beta, alpha.rank() + beta.rank());
  if (!term) return {};
  std::vector<std::size_t> dims = shape.dims();
  dims.erase(dims.begin() + static_cast<long>(i - 1));
  const FlagShape reduced(shape.n(), dims);
  // The merged block may share a slot with another factor (W_{d_2} when the
  // first step is forgotten), so combine through the tensor product.
  const BundleExpr image = tensor(BundleExpr::monomial(reduced, std::move(rest)),
                                  BundleExpr::monomial(reduced, {{Slot::block(i), term->weight}}));
  Resolved out;
  for (const auto& [mono, k] : image.terms()) {
    const Resolved below = cached_monomial(reduced, mono, true);
    out.exact = out.exact && below.exact;
    for (const auto& [t, c] : below.page) {
      auto [it, inserted] = out.page.try_emplace(t + term->degree, CharacterSum(shape.n()));
      it->second += c.scaled(k);
    }
  }
  std::erase_if(out.page, [](const auto& entry) { return entry.second.empty(); });
  return out;
}

Resolved resolve_monomial(const FlagShape& shape, const SchurMonomial& m, bool push) {
  if (shape.steps() == 0) {
    GLWeight w = GLWeight::zero(shape.n());
    for (const auto& f : m.factors()) w = f.weight;
    return {{{0, CharacterSum::single(w)}}, true};
  }
  if (push) {
    if (auto i = pushable_step(shape, m)) return push_step(shape, m, *i);
  }
  return monomial_e1(shape, m);
}

}  // namespace

std::optional<CohomologyTerm> cohomology_graded(const GradedMonomial& gm, const FlagShape& shape) {
  const auto blocks = shape.blocks();
  if (gm.block_weights.size() != blocks.size()) {
    throw ShapeMismatch("graded monomial has " + std::to_string(gm.block_weights.size()) +
                        " blocks, shape " + shape.to_string() + " has " +
                        std::to_string(blocks.size()));
  }
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (gm.block_weights[j].rank() != blocks[j]) {
      throw RankMismatch("block " + std::to_string(j + 1) + " weight has the wrong length");
    }
  }
  return resolve(gm.block_weights);
}

CohomologyOutcome cohomology(const BundleExpr& e, CohomologyOptions options) {
  CohomologyOutcome out;
  out.rank = e.shape().n();
  out.euler = CharacterSum(out.rank);
  out.grade = Grade::Exact;
  for (const auto& [m, k] : e.terms()) {
    BundleExpr single(e.shape());
    single.add(m, 1);
    const BundleExpr base = options.reduce_to_minimal_base ? minimal_base(single) : single;
    const SchurMonomial& bm = base.terms().begin()->first;
    const Resolved r = cached_monomial(base.shape(), bm, options.use_pushforward);
    if (!r.exact) out.grade = Grade::E1Bound;
    for (const auto& [t, c] : r.page) {
      auto [it, inserted] = out.by_degree.try_emplace(t, CharacterSum(out.rank));
      it->second += c.scaled(k);
    }
  }
  std::erase_if(out.by_degree, [](const auto& entry) { return entry.second.empty(); });
  // Exact values in adjacent degrees are reported as a bound, so that an
  // exact outcome never needs a differential to be ruled out.
  if (has_adjacent_degrees(out.by_degree)) out.grade = Grade::E1Bound;
  for (const auto& [t, c] : out.by_degree) {
    if (t % 2 == 0) {
      out.euler += c;
    } else {
      out.euler -= c;
    }
  }
  return out;
}

CohomologyOutcome ext_groups(const BundleExpr& a, const BundleExpr& b) {
  if (a.shape() != b.shape()) {
    throw ShapeMismatch("Ext between bundles on " + a.shape().to_string() + " and " +
                        b.shape().to_string());
  }
  return cohomology(tensor(dual(a), b));
}

CharacterSum euler_characteristic(const BundleExpr& e) { return cohomology(e).euler; }

CohomologyOutcome euler_outcome(const BundleExpr& e) {
  CohomologyOutcome out;
  out.rank = e.shape().n();
  out.euler = euler_characteristic(e);
  out.grade = Grade::EulerOnly;
  return out;
}

std::vector<PieceCohomology> e1_pieces(const BundleExpr& e, CohomologyOptions options) {
  std::vector<PieceCohomology> out;
  for (const auto& summand : e.summands()) {
    const Int mult = e.terms().at(summand.terms().begin()->first);
    const BundleExpr base = options.reduce_to_minimal_base ? minimal_base(summand) : summand;
    for (auto& piece : graded_expansion(base)) {
      piece.multiplicity *= mult;
      auto term = cohomology_graded(piece.monomial, base.shape());
      out.push_back({base.shape(), std::move(piece), std::move(term)});
    }
  }
  return out;
}

std::optional<CohomologyTerm> pushforward_grassmann(const GLWeight& alpha, const GLWeight& beta,
                                                    std::size_t m) {
  if (alpha.rank() + beta.rank() != m) {
    throw RankMismatch("pushforward_grassmann: lengths " + std::to_string(alpha.rank()) + " + " +
                       std::to_string(beta.rank()) + " != " + std::to_string(m));
  }
  const GLWeight parts[] = {alpha, beta};
  return resolve(parts);
}

}  // namespace flagtilt
