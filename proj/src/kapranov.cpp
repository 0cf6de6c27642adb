#include "flagtilt/kapranov.hpp"

#include <algorithm>
#include <functional>

#include "flagtilt/concurrent.hpp"
#include "flagtilt/error.hpp"

namespace flagtilt {

std::vector<GLWeight> box_partitions(std::size_t rows, std::size_t cols) {
  std::vector<GLWeight> out;
  std::vector<Int> parts(rows, 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t cap) {
    if (i == rows) {
      out.emplace_back(parts);
      return;
    }
    for (std::size_t v = 0; v <= cap; ++v) {
      parts[i] = v;
      fill(i + 1, v);
    }
    parts[i] = 0;
  };
  fill(0, cols);
  return out;
}

Int expected_collection_size(const FlagShape& shape) {
  auto factorial = [](std::size_t k) {
    Int f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  Int result = factorial(shape.n());
  for (std::size_t b : shape.blocks()) result /= factorial(b);
  return result;
}

Collection enumerate_collection(const FlagShape& shape) {
  const std::size_t s = shape.steps();
  std::vector<std::vector<GLWeight>> boxes;
  for (std::size_t r = 1; r <= s; ++r) {
    boxes.push_back(box_partitions(shape.dim(r), shape.dim(r + 1) - shape.dim(r)));
  }

  struct Entry {
    std::vector<Int> sizes;
    std::vector<GLWeight> parts;
  };
  std::vector<Entry> entries;
  std::vector<GLWeight> choice(s);
  std::function<void(std::size_t)> pick = [&](std::size_t r) {
    if (r == s) {
      Entry e;
      for (const auto& a : choice) e.sizes.push_back(a.size());
      e.parts = choice;
      entries.push_back(std::move(e));
      return;
    }
    for (const auto& a : boxes[r]) {
      choice[r] = a;
      pick(r + 1);
    }
  };
  pick(0);

  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.sizes != y.sizes) return x.sizes > y.sizes;
    return y.parts < x.parts;
  });

  Collection c{shape, {}};
  for (const auto& e : entries) {
    std::vector<Factor> fs;
    for (std::size_t r = 0; r < s; ++r) fs.push_back({Slot::sub(r + 1), e.parts[r]});
    c.members.push_back(BundleExpr::monomial(shape, std::move(fs)));
  }
  return c;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Confirmed:
      return "confirmed";
    case Verdict::Refuted:
      return "refuted";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Refuted || b == Verdict::Refuted) return Verdict::Refuted;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  return Verdict::Confirmed;
}

namespace {

// x is an honest representation contained in bound.
bool fits_under(const CharacterSum& x, const CharacterSum& bound) {
  for (const auto& [w, m] : x.terms()) {
    if (m < 0 || m > bound.multiplicity(w)) return false;
  }
  return true;
}

// If Ext^{>0} vanished, the Euler character would be H^0, an honest
// representation inside the degree-0 E1 term.
bool euler_forces_higher_ext(const CohomologyOutcome& ext) {
  if (ext.grade == Grade::EulerOnly) return !ext.euler.is_effective();
  return !fits_under(ext.euler, ext.at(0));
}

std::map<std::size_t, CharacterSum> positive_part(const CohomologyOutcome& ext) {
  std::map<std::size_t, CharacterSum> out;
  for (const auto& [t, c] : ext.by_degree) {
    if (t > 0 && !c.empty()) out.emplace(t, c);
  }
  return out;
}

ConditionStatus refuted(Witness w) { return {Verdict::Refuted, std::move(w), {}}; }

}  // namespace

ConditionStatus classify_higher_vanishing(const CohomologyOutcome& ext) {
  auto positive = positive_part(ext);
  if (ext.grade != Grade::EulerOnly && positive.empty()) return {};
  if (ext.grade == Grade::Exact) {
    const auto& [t, c] = *positive.begin();
    return refuted({Witness::Kind::ExactDegree, t, c});
  }
  if (euler_forces_higher_ext(ext)) return refuted({Witness::Kind::Euler, 0, ext.euler});
  return {Verdict::Inconclusive, std::nullopt, std::move(positive)};
}

ConditionStatus classify_total_vanishing(const CohomologyOutcome& ext) {
  if (ext.grade != Grade::EulerOnly && ext.degrees().empty()) return {};
  if (ext.grade == Grade::Exact) {
    const auto& [t, c] = *ext.by_degree.begin();
    return refuted({Witness::Kind::ExactDegree, t, c});
  }
  if (!ext.euler.empty()) return refuted({Witness::Kind::Euler, 0, ext.euler});
  return {Verdict::Inconclusive, std::nullopt, ext.by_degree};
}

ConditionStatus classify_scalar_endomorphisms(const CohomologyOutcome& ext) {
  const CharacterSum scalars = CharacterSum::trivial(ext.rank);
  const CharacterSum hom = ext.at(0);
  // H^0 always contains the identity and sits inside the E1 term, so an E1
  // term equal to k settles the question at any grade.
  if (ext.grade != Grade::EulerOnly && hom == scalars) return {};
  if (ext.grade == Grade::Exact) return refuted({Witness::Kind::ExactDegree, 0, hom});
  ConditionStatus open{Verdict::Inconclusive, std::nullopt, {}};
  open.bound.emplace(0, hom);
  return open;
}

bool witness_is_sound(const CohomologyOutcome& ext, const Witness& w, Condition condition) {
  if (w.kind == Witness::Kind::ExactDegree) {
    if (ext.grade != Grade::Exact || w.character.empty()) return false;
    if (condition == Condition::HigherVanishing && w.degree == 0) return false;
    return ext.at(w.degree) == w.character;
  }
  if (w.character != ext.euler) return false;
  if (condition == Condition::TotalVanishing) return !ext.euler.empty();
  return euler_forces_higher_ext(ext);
}

const PairVerdict& PairReport::at(std::size_t source, std::size_t target) const {
  return pairs.at(source * size() + target);
}

std::size_t PairReport::size() const {
  std::size_t n = 0;
  while (n * n < pairs.size()) ++n;
  return n;
}

PairReport check_strong_exceptional(std::span<const BundleExpr> members, unsigned jobs) {
  if (members.empty()) throw Error("cannot check an empty collection");
  for (const auto& m : members) {
    if (m.shape() != members.front().shape()) {
      throw ShapeMismatch("collection members live on different flag shapes");
    }
  }
  const std::size_t n = members.size();
  PairReport report;
  report.pairs.resize(n * n);
  parallel_for(n * n, jobs, [&](std::size_t k) {
    PairVerdict v;
    v.source = k / n;
    v.target = k % n;
    v.ext = ext_groups(members[v.source], members[v.target]);
    v.hom_character = v.ext.at(0);
    if (v.source == v.target) {
      v.hom_status = classify_scalar_endomorphisms(v.ext);
    } else if (v.source > v.target) {
      v.hom_status = classify_total_vanishing(v.ext);
    }
    v.higher_ext_status = classify_higher_vanishing(v.ext);
    report.pairs[k] = std::move(v);
  });
  for (const auto& v : report.pairs) {
    report.overall = combine(report.overall, v.higher_ext_status.verdict);
    if (v.hom_status) report.overall = combine(report.overall, v.hom_status->verdict);
  }
  return report;
}

HomQuiver hom_quiver(const Collection& c, unsigned jobs) {
  const std::size_t n = c.members.size();
  HomQuiver q;
  q.characters.assign(n, std::vector<CharacterSum>(n, CharacterSum(c.shape.n())));
  q.dims.assign(n, std::vector<Int>(n, 0));
  q.grades.assign(n, std::vector<Grade>(n, Grade::Exact));
  parallel_for(n * n, jobs, [&](std::size_t k) {
    const std::size_t i = k / n;
    const std::size_t j = k % n;
    const CohomologyOutcome ext = ext_groups(c.members[i], c.members[j]);
    q.characters[i][j] = ext.at(0);
    q.dims[i][j] = q.characters[i][j].dimension();
    q.grades[i][j] = ext.grade;
  });
  return q;
}

}  // namespace flagtilt
