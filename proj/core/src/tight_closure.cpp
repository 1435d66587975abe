#include "charp/tight_closure.hpp"

#include "charp/frobsolve.hpp"

namespace charp {

namespace {

SearchKind classify(const std::vector<bool>& passed) {
  bool all = true, seen_fail = false, mixed = false;
  for (bool b : passed) {
    if (!b) {
      all = false;
      seen_fail = true;
    } else if (seen_fail) {
      mixed = true;  // a pass after a failure
    }
  }
  if (all) return SearchKind::all_pass;
  return mixed ? SearchKind::mixed : SearchKind::fail_at;
}

}  // namespace

SearchOutcome tc_membership_search(const Poly& r, const IdealHandle& a,
                                   const TestElementSpec& c,
                                   const QuotientCtx& ctx, unsigned e_max,
                                   bool a_is_parameter) {
  if (c.c.is_zero()) throw DomainError("test element must be nonzero");
  if (e_max < c.w0) throw DomainError("e_max below the weak-test exponent w0");
  FrobeniusSolver solver(ctx.defining_ideal(), c.c, a_is_parameter);
  SearchOutcome out;
  out.first_e = c.w0;
  out.last_e = e_max;
  for (unsigned e = c.w0; e <= e_max; ++e)
    out.passed.push_back(solver.contains(a, e, r));
  out.kind = classify(out.passed);
  if (out.kind != SearchKind::all_pass) {
    for (std::size_t i = 0; i < out.passed.size(); ++i)
      if (!out.passed[i]) {
        out.fail_at = out.first_e + static_cast<unsigned>(i);
        break;
      }
  }
  return out;
}

TestExponentReport test_exponent_estimate(const TestElementSpec& c,
                                          const ParameterSystem& frame,
                                          const QuotientCtx& ctx,
                                          std::uint64_t t_max, unsigned i_max,
                                          unsigned e_max) {
  if (!ctx.flags().is_equidim_excellent)
    throw DomainError(
        "test-exponent estimation needs the equidimensional-excellent "
        "assertion");
  if (!ctx.flags().is_cm)
    throw DomainError(
        "test-exponent estimation is computed under the Cohen-Macaulay "
        "assertion");

  HslEstimate hsl = hsl_estimate(frame, ctx, t_max, e_max);
  StabilityChain chain =
      stability_index(c.c, frame, ctx, t_max, i_max, hsl.m0_lower);

  TestExponentReport report;
  report.m0_used = hsl.m0_lower;
  report.v0_used = chain.v0_empirical;
  report.e0 = report.m0_used + report.v0_used;
  report.hsl_stabilized = hsl.stabilized;
  report.hsl_truncated = hsl.truncated;
  report.v_stationary = chain.stationary;
  report.v_stabilized = chain.stabilized;
  return report;
}

TheoremVerdict verify_tc4(const TestElementSpec& c, const IdealHandle& a,
                          const Poly& r, const QuotientCtx& ctx,
                          const TestExponentReport& report, unsigned e_max,
                          bool a_is_parameter) {
  if (e_max <= report.e0)
    throw DomainError("verify_tc4 needs e_max > e0");
  FrobeniusSolver solver(ctx.defining_ideal(), c.c, a_is_parameter);

  std::optional<unsigned> fired;
  for (unsigned n1 = report.e0; n1 <= e_max; ++n1)
    if (solver.contains(a, n1, r)) {
      fired = n1;
      break;
    }
  if (!fired) return TheoremVerdict{TheoremOutcome::vacuous, {}, {}};

  for (unsigned e = c.w0; e <= e_max; ++e)
    if (!solver.contains(a, e, r))
      return TheoremVerdict{TheoremOutcome::counterexample, fired, e};
  return TheoremVerdict{TheoremOutcome::pass, fired, {}};
}

TheoremVerdict verify_tc8_ii(const TestElementSpec& c, const IdealHandle& a,
                             const Poly& r, const QuotientCtx& ctx,
                             const TestExponentReport& report, unsigned e_max,
                             bool a_is_parameter) {
  if (e_max <= report.e0)
    throw DomainError("verify_tc8_ii needs e_max > e0");

  // Hypothesis at n1:  c (c r^(p^n1))^(p^e) in (a^[p^n1])^[p^e] + J for all
  // e in the window, i.e.  c^(1+p^e) r^(p^(n1+e)) in a^[p^(n1+e)] + J.
  auto hypothesis = [&](unsigned n1) {
    for (unsigned e = c.w0; e <= e_max; ++e) {
      Poly gamma = c.c * c.c.frobenius(e);
      FrobeniusSolver solver(ctx.defining_ideal(), gamma, a_is_parameter);
      if (!solver.contains(a, n1 + e, r)) return false;
    }
    return true;
  };

  std::optional<unsigned> fired;
  for (unsigned n1 = report.e0 + 1; n1 <= e_max; ++n1)
    if (hypothesis(n1)) {
      fired = n1;
      break;
    }
  if (!fired) return TheoremVerdict{TheoremOutcome::vacuous, {}, {}};

  FrobeniusSolver solver(ctx.defining_ideal(), c.c, a_is_parameter);
  for (unsigned e = c.w0; e <= e_max; ++e)
    if (!solver.contains(a, e, r))
      return TheoremVerdict{TheoremOutcome::counterexample, fired, e};
  return TheoremVerdict{TheoremOutcome::pass, fired, {}};
}

}  // namespace charp
