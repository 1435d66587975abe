#ifndef CHARP_TIGHT_CLOSURE_HPP
#define CHARP_TIGHT_CLOSURE_HPP

#include <string>

#include "charp/stability.hpp"

namespace charp {

// User-supplied (weak) test element.  Whether c really is one cannot be
// verified here; `provenance` records the user's justification and is
// echoed in reports.
struct TestElementSpec {
  Poly c;
  unsigned w0 = 0;
  std::string provenance;
};

enum class SearchKind { all_pass, fail_at, mixed };

struct SearchOutcome {
  SearchKind kind;
  unsigned first_e = 0;                // window is [first_e, last_e]
  unsigned last_e = 0;
  std::optional<unsigned> fail_at;     // least failing exponent
  std::vector<bool> passed;            // indexed from first_e

  bool all_pass() const { return kind == SearchKind::all_pass; }
};

// Evaluates c r^(p^e) in a^[p^e] + J for e = w0..e_max.  AllPass is
// evidence (not proof) of tight-closure membership; a failure at or above
// a valid test exponent disproves it, modulo the test-element assertion.
// `a_is_parameter` asserts that a passed validate_parameter_ideal, which
// enables the fast solver route.
SearchOutcome tc_membership_search(const Poly& r, const IdealHandle& a,
                                   const TestElementSpec& c,
                                   const QuotientCtx& ctx, unsigned e_max,
                                   bool a_is_parameter);

struct TestExponentReport {
  unsigned e0 = 0;  // m0_used + v0_used
  unsigned m0_used = 0;
  unsigned v0_used = 0;
  bool hsl_stabilized = false;
  bool hsl_truncated = false;
  bool v_stationary = false;
  bool v_stabilized = false;

  bool empirical_unstabilized() const {
    return !hsl_stabilized || hsl_truncated || !v_stationary || !v_stabilized;
  }

  struct Trial {
    std::string r, ideal, outcome;
  };
  std::vector<Trial> trials;
};

// Composes the HSL estimate and the c-stability index; every truncation
// and stabilization flag is propagated.
TestExponentReport test_exponent_estimate(const TestElementSpec& c,
                                          const ParameterSystem& frame,
                                          const QuotientCtx& ctx,
                                          std::uint64_t t_max, unsigned i_max,
                                          unsigned e_max);

enum class TheoremOutcome { pass, vacuous, counterexample };

struct TheoremVerdict {
  TheoremOutcome outcome;
  std::optional<unsigned> fired_n1;    // where the single check held
  std::optional<unsigned> violated_e;  // counterexample detail
};

// Single-check implication: if c r^(p^n1) in a^[p^n1] + J for one single
// n1 >= e0, then the same holds for every e in [w0, e_max].
TheoremVerdict verify_tc4(const TestElementSpec& c, const IdealHandle& a,
                          const Poly& r, const QuotientCtx& ctx,
                          const TestExponentReport& report, unsigned e_max,
                          bool a_is_parameter);

// Variant with the hypothesis taken up to tight closure: the single check
// at n1 >= e0 + 1 is  tc_membership_search(c r^(p^n1), a^[p^n1]) = AllPass,
// evaluated without ever forming p^n1-scale polynomials.
TheoremVerdict verify_tc8_ii(const TestElementSpec& c, const IdealHandle& a,
                             const Poly& r, const QuotientCtx& ctx,
                             const TestExponentReport& report, unsigned e_max,
                             bool a_is_parameter);

}  // namespace charp

#endif
