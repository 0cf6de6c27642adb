#pragma once

// Twisted descent data for a tilting candidate: orbit sums under the inner
// twist group and under the duality automorphism sigma, the pairwise
// higher-Ext condition on the orbit, and the three counterexample families.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "flagtilt/cohomology.hpp"
#include "flagtilt/flagvar.hpp"
#include "flagtilt/kapranov.hpp"

namespace flagtilt {

/// InnerOnly: the inner twist group acts trivially on homogeneous bundles, so
/// orbits are singletons. WithSigma: the group generated by sigma, orbit
/// {T, sigma^* T}.
enum class TwistKind { InnerOnly, WithSigma };

std::string_view twist_kind_name(TwistKind k);

/// The orbit of t, one entry per group element: {t} or {t, sigma^* t}.
/// WithSigma requires a symmetric shape (InvalidShape otherwise).
std::vector<BundleExpr> orbit_members(const BundleExpr& t, TwistKind kind);

/// Direct sum over the orbit, as a multiset: a sigma-invariant t is doubled.
BundleExpr orbit_sum(const BundleExpr& t, TwistKind kind);

/// A refuted ordered pair of orbit members together with its witness.
struct DescentCertificate {
  std::size_t source = 0;
  std::size_t target = 0;
  Witness witness;
};

/// Condition (T2): the orbit sum has no higher self-extensions, checked on
/// every ordered pair (diagonal included) of its distinct monomial summands.
struct DescentReport {
  TwistKind kind = TwistKind::InnerOnly;
  std::vector<BundleExpr> members;  // distinct summands of the orbit sum
  std::vector<PairVerdict> pairs;
  Verdict t2_status = Verdict::Confirmed;
  std::vector<DescentCertificate> certificates;
};

DescentReport check_t2(const BundleExpr& t, TwistKind kind, unsigned jobs = 1);

/// One way of reading a counterexample family: T contains F and G, and the
/// obstruction is Ext^1(sigma^* F, G).
struct CounterexampleReading {
  std::string label;
  BundleExpr f;
  BundleExpr g;
  BundleExpr sigma_f;
  CohomologyOutcome ext;  // Ext^*(sigma^* F, G)
  /// The filtration E1 page alone, without pushforwards.
  CohomologyOutcome e1_outcome;
  std::vector<PieceCohomology> e1;
  ConditionStatus status;  // higher-Ext vanishing for the pair
  /// The expected obstruction Sigma^weight(V) in the stated degree.
  CohomologyTerm closed_form;
  /// ext is exact and equals the closed form exactly.
  bool closed_form_matches = false;
  /// The Euler character equals (-1)^degree times the closed form.
  bool closed_form_euler_matches = false;
};

struct CounterexampleReport {
  int case_number = 0;
  FlagShape shape;
  std::vector<CounterexampleReading> readings;
  /// Refuted if any reading refutes the vanishing.
  Verdict verdict = Verdict::Confirmed;
};

/// Case 1: d_1 >= 2, F = Lambda^{d_1 - 1} W_{d_1}, G = Sym^2 W_{d_s}.
/// Case 2: d_1 = 1, s >= 2, d_2 >= 3, F = Lambda^{d_2 - 1} W_{d_2},
///         G = Sym^2 W_{d_{s-1}}.
/// Case 3: d_1 = 1, s >= 2, d_2 = 2, G = W_{d_{s-1}} (x) W_{d_s}, read with
///         F = W_{d_1} and with F = W_{d_2}.
/// The shape must be symmetric and satisfy the case hypotheses
/// (InvalidShape otherwise); an unknown case number throws Error.
CounterexampleReport counterexample_case(int case_number, const FlagShape& shape);

}  // namespace flagtilt
