#include "flagtilt/twists.hpp"

#include <span>

#include "flagtilt/concurrent.hpp"
#include "flagtilt/error.hpp"

namespace flagtilt {

std::string_view twist_kind_name(TwistKind k) {
  return k == TwistKind::InnerOnly ? "inner" : "sigma";
}

std::vector<BundleExpr> orbit_members(const BundleExpr& t, TwistKind kind) {
  std::vector<BundleExpr> out{t};
  if (kind == TwistKind::WithSigma) out.push_back(sigma_pullback(t));
  return out;
}

BundleExpr orbit_sum(const BundleExpr& t, TwistKind kind) {
  BundleExpr sum(t.shape());
  for (const auto& m : orbit_members(t, kind)) sum += m;
  return sum;
}

DescentReport check_t2(const BundleExpr& t, TwistKind kind, unsigned jobs) {
  DescentReport report;
  report.kind = kind;
  report.members = orbit_sum(t, kind).summands();
  const std::size_t n = report.members.size();
  std::vector<std::pair<std::size_t, std::size_t>> index;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) index.emplace_back(a, b);
  }
  report.pairs.resize(index.size());
  parallel_for(index.size(), jobs, [&](std::size_t k) {
    PairVerdict v;
    v.source = index[k].first;
    v.target = index[k].second;
    v.ext = ext_groups(report.members[v.source], report.members[v.target]);
    v.hom_character = v.ext.at(0);
    v.higher_ext_status = classify_higher_vanishing(v.ext);
    report.pairs[k] = std::move(v);
  });
  for (const auto& v : report.pairs) {
    const auto& st = v.higher_ext_status;
    report.t2_status = combine(report.t2_status, st.verdict);
    if (st.verdict == Verdict::Refuted && st.witness &&
        witness_is_sound(v.ext, *st.witness, Condition::HigherVanishing)) {
      report.certificates.push_back({v.source, v.target, *st.witness});
    }
  }
  return report;
}

namespace {

BundleExpr schur_of_sub(const FlagShape& shape, std::size_t step, GLWeight w) {
  return BundleExpr::monomial(shape, {{Slot::sub(step), std::move(w)}});
}

CounterexampleReading read(std::string label, const FlagShape& shape, BundleExpr f,
                           BundleExpr g, std::size_t ext_size) {
  CounterexampleReading r{.label = std::move(label),
                          .f = f,
                          .g = g,
                          .sigma_f = sigma_pullback(f),
                          .ext = {},
                          .e1_outcome = {},
                          .e1 = {},
                          .status = {},
                          .closed_form = {}};
  const BundleExpr hom = tensor(dual(r.sigma_f), g);
  r.ext = cohomology(hom);
  r.e1_outcome = cohomology(hom, {.use_pushforward = false});
  r.e1 = e1_pieces(hom);
  r.status = classify_higher_vanishing(r.ext);
  r.closed_form = {1, GLWeight::exterior(ext_size, shape.n())};
  const CharacterSum expected = CharacterSum::single(r.closed_form.weight);
  CohomologyOutcome exact{shape.n(), {{1, expected}}, Grade::Exact, -expected};
  r.closed_form_matches = r.ext.grade == Grade::Exact && r.ext.by_degree == exact.by_degree;
  r.closed_form_euler_matches = r.ext.euler == exact.euler;
  return r;
}

}  // namespace

CounterexampleReport counterexample_case(int case_number, const FlagShape& shape) {
  if (case_number < 1 || case_number > 3) {
    throw Error("unknown counterexample case " + std::to_string(case_number));
  }
  if (!shape.is_symmetric()) {
    throw InvalidShape(shape.to_string() + " is not symmetric under d -> n - d");
  }
  const std::size_t s = shape.steps();
  auto require = [&](bool ok, const char* what) {
    if (!ok) {
      throw InvalidShape("case " + std::to_string(case_number) + " needs " + what + ", got " +
                         shape.to_string());
    }
  };

  CounterexampleReport report{case_number, shape, {}, Verdict::Confirmed};
  switch (case_number) {
    case 1: {
      const std::size_t d1 = shape.dim(1);
      require(d1 >= 2, "d_1 >= 2");
      report.readings.push_back(read("F = Lambda^{d_1-1} W_{d_1}", shape,
                                     schur_of_sub(shape, 1, GLWeight::exterior(d1 - 1, d1)),
                                     schur_of_sub(shape, s, GLWeight::symmetric(2, shape.dim(s))),
                                     d1 + 1));
      break;
    }
    case 2: {
      require(shape.dim(1) == 1 && s >= 2 && shape.dim(2) >= 3, "d_1 = 1, s >= 2, d_2 >= 3");
      const std::size_t d2 = shape.dim(2);
      report.readings.push_back(
          read("F = Lambda^{d_2-1} W_{d_2}", shape,
               schur_of_sub(shape, 2, GLWeight::exterior(d2 - 1, d2)),
               schur_of_sub(shape, s - 1, GLWeight::symmetric(2, shape.dim(s - 1))), d2 + 1));
      break;
    }
    case 3: {
      require(shape.dim(1) == 1 && s >= 2 && shape.dim(2) == 2, "d_1 = 1, s >= 2, d_2 = 2");
      const BundleExpr g = BundleExpr::monomial(
          shape, {{Slot::sub(s - 1), GLWeight::exterior(1, shape.dim(s - 1))},
                  {Slot::sub(s), GLWeight::exterior(1, shape.dim(s))}});
      for (std::size_t step : {std::size_t{1}, std::size_t{2}}) {
        report.readings.push_back(read("F = W_{d_" + std::to_string(step) + "}", shape,
                                       schur_of_sub(shape, step,
                                                    GLWeight::exterior(1, shape.dim(step))),
                                       g, 3));
      }
      break;
    }
  }
  for (const auto& r : report.readings) report.verdict = combine(report.verdict, r.status.verdict);
  return report;
}

}  // namespace flagtilt
