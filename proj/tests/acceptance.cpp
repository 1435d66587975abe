// Acceptance suite: each criterion prints one PASS/FAIL line with its
// wall-clock time and enforces its stated budget.  The process exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "charp/frobsolve.hpp"
#include "charp/parse.hpp"
#include "charp/tight_closure.hpp"
#include "support/oracles.hpp"
#include "support/test_rings.hpp"

using namespace charp;
using namespace charp::testing;

namespace {

int failures = 0;
int checks = 0;

void expect(bool ok, const char* what) {
  ++checks;
  if (!ok) {
    ++failures;
    std::printf("    check failed: %s\n", what);
  }
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<void()> body;
};

Poly P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

IdealHandle I(const std::string& gens, const RingPtr& r) {
  return IdealHandle(r, parse_poly_list(gens, r));
}

// ---------------------------------------------------------------- 1
void groebner_oracle_equivalence() {
  std::mt19937_64 rng(20240801);
  auto r = make_ring(2, {"x", "y"});
  for (int trial = 0; trial < 200; ++trial) {
    IdealHandle ideal = random_ideal(r, rng, 2, 3, 4);
    Poly query = random_poly(r, rng, 4, 5);
    if (trial % 3 == 0 && !ideal.gens().empty())
      query = ideal.gens()[0] * random_poly(r, rng, 2, 3) +
              ideal.gens().back() * random_poly(r, rng, 2, 3);
    bool via_gb = ideal.contains(query);
    bool via_oracle = linear_membership_oracle(query, ideal, 6);
    expect(via_gb == via_oracle, "membership disagrees with linear oracle");
  }
}

// ---------------------------------------------------------------- 2
void frobenius_root_adjunction() {
  // Defining adjunction of the minimal root: I_e(K) <= J iff K <= J^[p^e];
  // in particular J^[p^e] <= K forces J <= I_e(K).
  std::mt19937_64 rng(20240802);
  int done = 0;
  while (done < 200) {
    for (std::uint64_t p : {2ull, 3ull}) {
      auto r = make_ring(p, {"x", "y"});
      unsigned e = 1 + (done % 2);
      FrobeniusExponent fe(r->characteristic(), e);
      IdealHandle J = random_ideal(r, rng, 2, 2, 2);
      IdealHandle K = random_ideal(r, rng, 2, 4, 3);
      IdealHandle root = frobenius_root(K, fe);
      IdealHandle bracket = frobenius_power(J, fe);
      expect(J.contains(root) == bracket.contains(K),
             "root/power adjunction broken");
      if (K.contains(bracket))
        expect(root.contains(J), "bracket inclusion does not descend");
      ++done;
    }
  }
}

// ---------------------------------------------------------------- 3
void regular_ring_exactness() {
  std::mt19937_64 rng(20240803);
  int done = 0;
  while (done < 100) {
    for (std::uint64_t p : {2ull, 3ull}) {
      QuotientCtx ctx = regular_ctx(p);
      const RingPtr& r = ctx.ambient();
      IdealHandle a = random_ideal(r, rng, 2, 3, 3);
      Poly f = random_poly(r, rng, 3, 3);
      unsigned e = 1 + (done % 3);
      FrobeniusExponent fe(r->characteristic(), e);
      bool plain = a.contains(f);
      bool bracket = frobenius_power(a, fe).contains(f.frobenius(e));
      expect(plain == bracket, "Kunz equivalence broken");
      if (!a.is_unit_ideal()) {
        SearchOutcome out = tc_membership_search(
            f, a, TestElementSpec{P("1", r), 0, "acceptance"}, ctx, 3, false);
        expect(out.all_pass() == plain, "unit search differs from membership");
      }
      ++done;
    }
  }
}

// ---------------------------------------------------------------- 4
void closure_certificate() {
  QuotientCtx ctx = fermat_ctx(2);
  const RingPtr& r = ctx.ambient();
  IdealHandle frame = I("x, y", r);
  ClosureResult res = frobenius_closure(frame, 5, ctx.defining_ideal(), true);
  expect(res.state == ClosureState::stabilized, "closure not stabilized");
  expect(res.closure.contains(P("z^2", r)), "closure misses z^2");
  expect(frobenius_membership(P("z^2", r), frame, 5, ctx.defining_ideal()) ==
             1u,
         "certificate exponent is not 1");
  expect(!ctx.member_mod(P("z^2", r), frame), "z^2 wrongly in (x, y)");
}

// ---------------------------------------------------------------- 5
void hsl_dichotomy() {
  QuotientCtx f7 = fermat_ctx(7);
  HslEstimate h7 = hsl_estimate(frame_of(f7, "x, y"), f7, 4, 5);
  expect(h7.m0_lower == 0, "seven-adic cubic should report 0");
  expect(h7.stabilized, "estimate not stabilized at t_max = 4");

  // Independent route: the monomial x^6 y^6 z^6 carries coefficient
  // 6!/(2!2!2!) = 90 = 6 mod 7 inside f^6, so f^6 survives outside
  // (x^7, y^7, z^7) and the Frobenius splits.
  Poly f6 = f7.defining_ideal().gens()[0].pow(6);
  Monomial m666(3);
  m666[0] = m666[1] = m666[2] = 6;
  expect(coefficient_of(f6, m666) == 6, "multinomial coefficient is not 6");
  expect(fedder_f_pure(f7), "Fedder oracle disagrees");

  QuotientCtx f2 = fermat_ctx(2);
  HslEstimate h2 = hsl_estimate(frame_of(f2, "x, y"), f2, 4, 5);
  expect(h2.m0_lower >= 1, "characteristic-2 cubic should report >= 1");
  expect(!fedder_f_pure(f2), "Fedder oracle disagrees at p = 2");

  CechClass witness = make_cech_class(P("z^2", f2.ambient()), 1,
                                      frame_of(f2, "x, y"), f2);
  expect(cech_is_zero(witness).state == ZeroState::nonzero_certified,
         "witness class is not nonzero");
  expect(torsion_order(witness, 5) == 1u, "witness torsion order is not 1");
}

// ---------------------------------------------------------------- 6
void hs5_chain_properties() {
  struct Config {
    QuotientCtx ctx;
    std::string frame;
    std::string c;
  };
  std::vector<Config> configs;
  for (std::uint64_t p : {2ull, 3ull, 7ull}) {
    configs.push_back({regular_ctx(p), "x, y", "1"});
    configs.push_back({regular_ctx(p), "x, y", "x"});
  }
  configs.push_back({fermat_ctx(2), "x, y", "x"});
  configs.push_back({fermat_ctx(7), "x, y", "x"});

  for (const Config& cfg : configs) {
    ParameterSystem frame = frame_of(cfg.ctx, cfg.frame);
    const RingPtr& r = cfg.ctx.ambient();
    unsigned m0 = hsl_estimate(frame, cfg.ctx, 4, 5).m0_lower;
    StabilityChain chain =
        stability_index(P(cfg.c, r), frame, cfg.ctx, 4, 8, m0);
    expect(chain.stationary, "chain not stationary within i_max = 8");
    Hs5Report rep = verify_hs5_properties(chain, cfg.ctx);
    for (const auto& v : rep.violations)
      std::printf("    violation: %s\n", v.c_str());
    expect(rep.pass, "structural chain checks failed");

    // Stationarity where first equality occurs, for two further steps.
    for (const auto& [t, ch] : chain.per_level) {
      for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
        if (ch[i] == ch[i + 1]) {
          if (i + 2 < ch.size())
            expect(ch[i + 2] == ch[i], "first equality not stationary (+2)");
          break;
        }
      }
    }
  }
}

// ---------------------------------------------------------------- 7
void end_to_end_theorem_verification() {
  std::mt19937_64 rng(20240807);
  struct Config {
    QuotientCtx ctx;
    std::string frame;
    std::string c;
  };
  std::vector<Config> configs = {
      {regular_ctx(2), "x, y", "x"},   {regular_ctx(3), "x, y", "x"},
      {regular_ctx(7), "x, y", "x"},   {fermat_ctx(2), "x, y", "x"},
      {fermat_ctx(7), "x, y", "x"},    {monomial_ctx(7), "x+y", "x+y"},
  };

  unsigned total_passes = 0, total_counterexamples = 0;
  for (Config& cfg : configs) {
    const RingPtr& r = cfg.ctx.ambient();
    ParameterSystem frame = frame_of(cfg.ctx, cfg.frame);
    TestElementSpec c{P(cfg.c, r), 0, "acceptance"};
    TestExponentReport report =
        test_exponent_estimate(c, frame, cfg.ctx, 4, 8, 5);
    unsigned e_max = std::max(5u, report.e0 + 2);

    std::vector<std::pair<Poly, IdealHandle>> trials;

    // Parameter ideals from the frame: sub-frames and powers.
    std::vector<IdealHandle> ideals;
    ideals.push_back(frame.ideal(r));
    ideals.push_back(IdealHandle(r, {frame.elems[0]}));
    ideals.push_back(IdealHandle(r, {frame.elems[0].pow(2)}));
    if (frame.elems.size() > 1) {
      ideals.push_back(IdealHandle(r, {frame.elems[0], frame.elems[1].pow(2)}));
      ideals.push_back(
          IdealHandle(r, {frame.elems[0].pow(3), frame.elems[1].pow(2)}));
    } else {
      ideals.push_back(IdealHandle(r, {frame.elems[0].pow(3)}));
      ideals.push_back(IdealHandle(r, {frame.elems[0].pow(4)}));
    }

    for (const IdealHandle& a : ideals) {
      // Random elements, forced members, and adversarial colon samples.
      for (int k = 0; k < 8; ++k)
        trials.emplace_back(random_poly(r, rng, 3, 3), a);
      for (int k = 0; k < 2; ++k)
        trials.emplace_back(a.gens()[k % a.gens().size()] *
                                random_poly(r, rng, 2, 2),
                            a);
      FrobeniusExponent q(r->characteristic(), report.e0);
      IdealHandle boundary =
          ideal_colon(cfg.ctx.lift(frobenius_power(a, q)),
                      c.c.frobenius(report.m0_used));
      IdealHandle base = cfg.ctx.lift(a);
      int taken = 0;
      for (const Poly& g : boundary.basis()) {
        Poly reduced = base.normal_form(g);
        if (reduced.is_zero() || taken >= 3) continue;
        trials.emplace_back(reduced, a);
        ++taken;
      }
    }
    if (r->p() == 7 && !cfg.ctx.defining_ideal().is_zero_ideal() &&
        cfg.ctx.dim() == 2)
      trials.emplace_back(P("z^2", r), frame.ideal(r));

    expect(trials.size() >= 50, "fewer than 50 sampled pairs for a ring");
    for (auto& [elem, a] : trials) {
      TheoremVerdict v4 = verify_tc4(c, a, elem, cfg.ctx, report, e_max, true);
      TheoremVerdict v8 =
          verify_tc8_ii(c, a, elem, cfg.ctx, report, e_max, true);
      if (v4.outcome == TheoremOutcome::counterexample ||
          v8.outcome == TheoremOutcome::counterexample)
        ++total_counterexamples;
      if (v4.outcome == TheoremOutcome::pass) ++total_passes;
      report.trials.push_back(TestExponentReport::Trial{
          to_string(elem), to_string(a.gens().empty() ? Poly::zero(r)
                                                      : a.gens()[0]),
          v4.outcome == TheoremOutcome::pass      ? "Pass"
          : v4.outcome == TheoremOutcome::vacuous ? "Vacuous"
                                                  : "Counterexample"});
    }
  }
  expect(total_counterexamples == 0, "counterexample verdicts observed");
  expect(total_passes >= 10, "fewer than 10 non-vacuous Pass verdicts");
  std::printf("    pairs passed: %u, counterexamples: %u\n", total_passes,
              total_counterexamples);
}

// ---------------------------------------------------------------- 8
void semilinearity_and_cech_laws() {
  std::mt19937_64 rng(20240808);
  struct Config {
    QuotientCtx ctx;
    std::string frame;
  };
  std::vector<Config> configs = {
      {regular_ctx(2), "x, y"}, {regular_ctx(3), "x, y"},
      {regular_ctx(7), "x, y"}, {fermat_ctx(2), "x, y"},
      {fermat_ctx(7), "x, y"},  {monomial_ctx(7), "x+y"},
  };
  for (Config& cfg : configs) {
    const RingPtr& r = cfg.ctx.ambient();
    ParameterSystem frame = frame_of(cfg.ctx, cfg.frame);
    for (int i = 0; i < 100; ++i) {
      CechClass h = make_cech_class(random_poly(r, rng, 3, 3), 1 + (i % 2),
                                    frame, cfg.ctx);
      Poly s = random_poly(r, rng, 2, 2);
      expect(cech_equal(cech_x_action(cech_scalar_mul(s, h)),
                        cech_scalar_mul(s.frobenius(1), cech_x_action(h))),
             "semilinearity x(s h) = s^p x(h) fails");
      expect(cech_equal(h, cech_raise_level(h, h.level + 1)),
             "level raising changes the class");
    }
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 Groebner oracle equivalence (200 queries)", 60.0,
       groebner_oracle_equivalence},
      {"2 Frobenius-root adjunction (200 triples)", 60.0,
       frobenius_root_adjunction},
      {"3 regular-ring exactness (100 cases)", 60.0, regular_ring_exactness},
      {"4 Frobenius-closure certificate", 10.0, closure_certificate},
      {"5 HSL dichotomy with Fedder cross-check", 120.0, hsl_dichotomy},
      {"6 chain properties across the corpus", 600.0, hs5_chain_properties},
      {"7 end-to-end single-check verification", 900.0,
       end_to_end_theorem_verification},
      {"8 semilinearity and Cech laws (100 classes/ring)", 60.0,
       semilinearity_and_cech_laws},
  };

  int failed_criteria = 0;
  for (auto& crit : criteria) {
    int before = failures;
    auto t0 = std::chrono::steady_clock::now();
    bool threw = false;
    try {
      crit.body();
    } catch (const std::exception& e) {
      threw = true;
      std::printf("    exception: %s\n", e.what());
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    bool in_budget = seconds < crit.budget_seconds;
    bool ok = !threw && failures == before && in_budget;
    if (!in_budget)
      std::printf("    over budget: %.1fs (limit %.0fs)\n", seconds,
                  crit.budget_seconds);
    std::printf("[%s] criterion %s (%.2fs)\n", ok ? "PASS" : "FAIL",
                crit.name, seconds);
    if (!ok) ++failed_criteria;
  }
  std::printf("%d/%zu criteria passed, %d checks run\n",
              static_cast<int>(criteria.size()) - failed_criteria,
              criteria.size(), checks);
  return failed_criteria == 0 ? 0 : 1;
}
