// charp: prime-characteristic commutative algebra from the command line.
//
// Subcommands: gb, member, fpow, froot, fclosure, cech-zero, hsl,
// stability, tc-member, test-exponent, verify-theorem, run.
//
// Exit codes: 0 success / theorem Pass; 1 mathematical negative;
// 2 usage error; 3 budget exhausted or inconclusive; 4 internal
// invariant violation (counterexample verdicts included).

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>

#include "charp/frobsolve.hpp"
#include "charp/parse.hpp"
#include "charp/ringfile.hpp"
#include "charp/tight_closure.hpp"

using json = nlohmann::ordered_json;
using namespace charp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitInvariant = 4;

struct Budgets {
  std::uint64_t t_max = 4;
  unsigned e_max = 5;
  unsigned i_max = 8;
  unsigned k_max = 10;
  std::uint64_t seed = 0;
};

struct Session {
  std::string ring_path;
  bool json_out = false;
  Budgets budgets;
  RingFile ring_file;
  std::vector<std::string> argv_echo;

  QuotientCtx ctx() const { return ring_file.context(); }
};

json ideal_json(const IdealHandle& I) {
  json out = json::array();
  for (const Poly& g : I.basis()) out.push_back(to_string(g));
  return out;
}

json spec_echo(const Session& s) {
  json spec;
  spec["ring_file"] = s.ring_path;
  spec["ring_source"] = s.ring_file.source;
  spec["argv"] = s.argv_echo;
  json flags;
  flags["domain"] = s.ring_file.flags.is_domain;
  flags["cm"] = s.ring_file.flags.is_cm;
  flags["equidim_excellent"] = s.ring_file.flags.is_equidim_excellent;
  spec["flags_asserted"] = flags;
  json budgets;
  budgets["t_max"] = s.budgets.t_max;
  budgets["e_max"] = s.budgets.e_max;
  budgets["i_max"] = s.budgets.i_max;
  budgets["k_max"] = s.budgets.k_max;
  budgets["seed"] = s.budgets.seed;
  spec["budgets"] = budgets;
  return spec;
}

int emit(const Session& s, const std::string& command, const json& result,
         int code, std::chrono::steady_clock::time_point started) {
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  json report;
  report["schema"] = 1;
  report["command"] = command;
  report["spec"] = spec_echo(s);
  report["result"] = result;
  report["exit_code"] = code;
  report["timing_ms"] = elapsed;
  if (s.json_out) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << command << ": " << result.dump() << "\n";
  }
  return code;
}

ParameterSystem resolve_frame(const Session& s, const std::string& frame_text,
                              const std::string& fallback_ideal_text) {
  QuotientCtx ctx = s.ctx();
  if (!frame_text.empty())
    return validate_parameter_ideal(
        parse_poly_list(frame_text, ctx.ambient()), ctx);
  if (!fallback_ideal_text.empty()) {
    ParameterSystem ps = validate_parameter_ideal(
        parse_poly_list(fallback_ideal_text, ctx.ambient()), ctx);
    if (ps.full) return ps;
  }
  throw DomainError("a full system of parameters is needed; pass --frame");
}

// Returns true when gens validate as a parameter ideal; used to pick the
// fast solver route and to warn otherwise.
bool parameter_or_warn(const std::vector<Poly>& gens, const QuotientCtx& ctx,
                       bool quiet) {
  try {
    validate_parameter_ideal(gens, ctx);
    return true;
  } catch (const DomainError& e) {
    if (!quiet)
      std::cerr << "warning: not a validated parameter ideal ("
                << e.what() << "); continuing on the general route\n";
    return false;
  }
}

int run_gb(Session& s, const std::string& gens_text, bool mod_quotient,
           std::chrono::steady_clock::time_point t0) {
  QuotientCtx ctx = s.ctx();
  IdealHandle I(ctx.ambient(), parse_poly_list(gens_text, ctx.ambient()));
  if (mod_quotient) I = ctx.lift(I);
  json result;
  result["basis"] = ideal_json(I);
  result["size"] = I.basis().size();
  return emit(s, "gb", result, kExitOk, t0);
}

int run_member(Session& s, const std::string& f_text,
               const std::string& gens_text,
               std::chrono::steady_clock::time_point t0) {
  QuotientCtx ctx = s.ctx();
  Poly f = parse_poly(f_text, ctx.ambient());
  IdealHandle I(ctx.ambient(), parse_poly_list(gens_text, ctx.ambient()));
  bool member = ctx.member_mod(f, I);
  json result;
  result["element"] = to_string(f);
  result["ideal"] = ideal_json(I);
  result["member"] = member;
  result["normal_form"] = to_string(ctx.lift(I).normal_form(f));
  return emit(s, "member", result, member ? kExitOk : kExitNegative, t0);
}

int run_fpow(Session& s, const std::string& gens_text, unsigned e,
             std::chrono::steady_clock::time_point t0) {
  QuotientCtx ctx = s.ctx();
  IdealHandle I(ctx.ambient(), parse_poly_list(gens_text, ctx.ambient()));
  FrobeniusExponent fe(ctx.ambient()->characteristic(), e);
  json result;
  result["e"] = e;
  result["q"] = fe.q();
  result["basis"] = ideal_json(frobenius_power(I, fe));
  return emit(s, "fpow", result, kExitOk, t0);
}

int run_froot(Session& s, const std::string& gens_text, unsigned e,
              std::chrono::steady_clock::time_point t0) {
  QuotientCtx ctx = s.ctx();
  IdealHandle I(ctx.ambient(), parse_poly_list(gens_text, ctx.ambient()));
  FrobeniusExponent fe(ctx.ambient()->characteristic(), e);
  json result;
  result["e"] = e;
  result["basis"] = ideal_json(frobenius_root(I, fe));
  return emit(s, "froot", result, kExitOk, t0);
}

int run_fclosure(Session& s, const std::string& gens_text,
                 std::chrono::steady_clock::time_point t0) {
  QuotientCtx ctx = s.ctx();
  std::vector<Poly> gens = parse_poly_list(gens_text, ctx.ambient());
  bool param = parameter_or_warn(gens, ctx, s.json_out);
  IdealHandle I(ctx.ambient(), gens);
  ClosureResult res =
      frobenius_closure(I, s.budgets.e_max, ctx.defining_ideal(), param);

  json result;
  result["input"] = ideal_json(ctx.lift(I));
  result["closure"] = ideal_json(res.closure);
  switch (res.state) {
    case ClosureState::stabilized:
      result["state"] = "stabilized";
      result["stabilized_at"] = *res.stabilized_at;
      break;
    case ClosureState::truncated:
      result["state"] = "truncated";
      break;
    case ClosureState::unit:
      result["state"] = "unit";
      break;
  }
  json added = json::array();
  IdealHandle base = ctx.lift(I);
  for (const Poly& g : res.closure.basis()) {
    if (base.contains(g)) continue;
    json entry;
    entry["generator"] = to_string(g);
    auto cert = frobenius_membership(g, I, s.budgets.e_max,
                                     ctx.defining_ideal());
    if (cert) entry["certificate_e"] = *cert;
    added.push_back(entry);
  }
  result["new_generators"] = added;
  int code = res.state == ClosureState::truncated ? kExitInconclusive
                                                  : kExitOk;
  return emit(s, "fclosure", result, code, t0);
}

int run_cech_zero(Session& s, const std::string& r_text, std::uint64_t level,
                  const std::string& frame_text,
                  std::chrono::steady_clock::time_point t0) {
  QuotientCtx ctx = s.ctx();
  ParameterSystem frame = resolve_frame(s, frame_text, "");
  CechClass h = make_cech_class(parse_poly(r_text, ctx.ambient()), level,
                                frame, ctx);
  ZeroTest z = cech_is_zero(h, s.budgets.k_max);
  json result;
  result["numerator"] = r_text;
  result["level"] = level;
  int code = kExitOk;
  switch (z.state) {
    case ZeroState::zero:
      result["state"] = "zero";
      result["witness_k"] = z.witness_k;
      break;
    case ZeroState::nonzero_certified:
      result["state"] = "nonzero_certified";
      code = kExitNegative;
      break;
    case ZeroState::nonzero_up_to_bound:
      result["state"] = "nonzero_up_to_bound";
      result["k_max"] = s.budgets.k_max;
      code = kExitInconclusive;
      break;
  }
  return emit(s, "cech-zero", result, code, t0);
}

json hsl_json(const HslEstimate& h) {
  json out;
  out["m0_lower"] = h.m0_lower;
  out["t_max"] = h.t_max;
  out["stabilized"] = h.stabilized;
  out["truncated"] = h.truncated;
  return out;
}

int run_hsl(Session& s, const std::string& frame_text,
            std::chrono::steady_clock::time_point t0) {
  QuotientCtx ctx = s.ctx();
  ParameterSystem frame = resolve_frame(s, frame_text, "");
  HslEstimate h = hsl_estimate(frame, ctx, s.budgets.t_max, s.budgets.e_max);
  json result = hsl_json(h);
  json levels = json::array();
  for (std::uint64_t t = 1; t <= s.budgets.t_max; ++t) {
    GammaLevel g = gamma_x_level(t, frame, ctx, s.budgets.e_max);
    json lv;
    lv["t"] = t;
    lv["torsion_numerator"] = ideal_json(g.numerator);
    lv["truncated"] = g.truncated;
    if (g.stabilized_at) lv["stabilized_at"] = *g.stabilized_at;
    levels.push_back(lv);
  }
  result["levels"] = levels;
  return emit(s, "hsl", result, h.stabilized ? kExitOk : kExitInconclusive,
              t0);
}

json chain_json(const StabilityChain& chain) {
  json out;
  out["m0_used"] = chain.m0_used;
  out["v0_empirical"] = chain.v0_empirical;
  out["stationary"] = chain.stationary;
  out["stabilized"] = chain.stabilized;
  json levels = json::array();
  for (const auto& [t, ideals] : chain.per_level) {
    json lv;
    lv["t"] = t;
    json steps = json::array();
    for (const IdealHandle& n : ideals) steps.push_back(ideal_json(n));
    lv["chain"] = steps;
    levels.push_back(lv);
  }
  out["levels"] = levels;
  return out;
}

int run_stability(Session& s, const std::string& c_text,
                  const std::string& frame_text, int m0_override,
                  std::chrono::steady_clock::time_point t0) {
  QuotientCtx ctx = s.ctx();
  ParameterSystem frame = resolve_frame(s, frame_text, "");
  Poly c = parse_poly(c_text, ctx.ambient());
  unsigned m0 = m0_override >= 0
                    ? static_cast<unsigned>(m0_override)
                    : hsl_estimate(frame, ctx, s.budgets.t_max,
                                   s.budgets.e_max)
                          .m0_lower;
  StabilityChain chain = stability_index(c, frame, ctx, s.budgets.t_max,
                                         s.budgets.i_max, m0);
  Hs5Report hs5 = verify_hs5_properties(chain, ctx);
  json result = chain_json(chain);
  result["c"] = to_string(c);
  result["hs5_checks"] = hs5.pass;
  if (!hs5.pass) result["hs5_violations"] = hs5.violations;
  int code = !hs5.pass ? kExitInvariant
             : chain.stationary ? kExitOk
                                : kExitInconclusive;
  return emit(s, "stability", result, code, t0);
}

int run_tc_member(Session& s, const std::string& c_text, unsigned w0,
                  const std::string& r_text, const std::string& ideal_text,
                  std::chrono::steady_clock::time_point t0) {
  QuotientCtx ctx = s.ctx();
  Poly r = parse_poly(r_text, ctx.ambient());
  std::vector<Poly> gens = parse_poly_list(ideal_text, ctx.ambient());
  bool param = parameter_or_warn(gens, ctx, s.json_out);
  IdealHandle a(ctx.ambient(), gens);
  TestElementSpec c{parse_poly(c_text, ctx.ambient()), w0, "cli"};
  if (!is_nonzerodivisor(c.c, ctx))
    throw DomainError("test element must be a nonzerodivisor");
  SearchOutcome out =
      tc_membership_search(r, a, c, ctx, s.budgets.e_max, param);

  json result;
  result["r"] = to_string(r);
  result["ideal"] = ideal_json(a);
  result["c"] = to_string(c.c);
  result["w0"] = w0;
  json window = json::array();
  for (std::size_t i = 0; i < out.passed.size(); ++i) {
    json step;
    step["e"] = out.first_e + i;
    step["holds"] = static_cast<bool>(out.passed[i]);
    window.push_back(step);
  }
  result["window"] = window;
  int code = kExitOk;
  switch (out.kind) {
    case SearchKind::all_pass:
      result["outcome"] = "AllPass";
      break;
    case SearchKind::fail_at:
      result["outcome"] = "FailAt";
      result["fail_at"] = *out.fail_at;
      code = kExitNegative;
      break;
    case SearchKind::mixed:
      result["outcome"] = "Mixed";
      result["fail_at"] = *out.fail_at;
      code = kExitInconclusive;
      break;
  }
  return emit(s, "tc-member", result, code, t0);
}

json report_json(const TestExponentReport& rep) {
  json out;
  out["e0"] = rep.e0;
  out["m0_used"] = rep.m0_used;
  out["v0_used"] = rep.v0_used;
  out["hsl_stabilized"] = rep.hsl_stabilized;
  out["hsl_truncated"] = rep.hsl_truncated;
  out["v_stationary"] = rep.v_stationary;
  out["v_stabilized"] = rep.v_stabilized;
  out["empirical_unstabilized"] = rep.empirical_unstabilized();
  return out;
}

int run_test_exponent(Session& s, const std::string& c_text, unsigned w0,
                      const std::string& frame_text,
                      std::chrono::steady_clock::time_point t0) {
  QuotientCtx ctx = s.ctx();
  ParameterSystem frame = resolve_frame(s, frame_text, "");
  TestElementSpec c{parse_poly(c_text, ctx.ambient()), w0, "cli"};
  if (!is_nonzerodivisor(c.c, ctx))
    throw DomainError("test element must be a nonzerodivisor");
  TestExponentReport rep = test_exponent_estimate(
      c, frame, ctx, s.budgets.t_max, s.budgets.i_max, s.budgets.e_max);
  json result = report_json(rep);
  result["c"] = to_string(c.c);
  result["w0"] = w0;
  result["test_exponent"] = "p^" + std::to_string(rep.e0);
  return emit(s, "test-exponent", result,
              rep.empirical_unstabilized() ? kExitInconclusive : kExitOk, t0);
}

const char* outcome_name(TheoremOutcome o) {
  switch (o) {
    case TheoremOutcome::pass:
      return "Pass";
    case TheoremOutcome::vacuous:
      return "Vacuous";
    case TheoremOutcome::counterexample:
      return "Counterexample";
  }
  return "?";
}

int run_verify(Session& s, const std::string& variant,
               const std::string& c_text, unsigned w0,
               const std::string& r_text, const std::string& ideal_text,
               const std::string& frame_text, int n1_opt, unsigned samples,
               std::uint64_t level,
               std::chrono::steady_clock::time_point t0) {
  QuotientCtx ctx = s.ctx();
  const RingPtr& ring = ctx.ambient();
  Poly cpoly = parse_poly(c_text, ring);
  if (!is_nonzerodivisor(cpoly, ctx))
    throw DomainError("test element must be a nonzerodivisor");
  TestElementSpec c{cpoly, w0, "cli"};
  json result;
  result["variant"] = variant;
  result["c"] = to_string(cpoly);

  if (variant == "hs5") {
    ParameterSystem frame = resolve_frame(s, frame_text, ideal_text);
    unsigned m0 =
        hsl_estimate(frame, ctx, s.budgets.t_max, s.budgets.e_max).m0_lower;
    StabilityChain chain = stability_index(
        cpoly, frame, ctx, s.budgets.t_max, s.budgets.i_max, m0);
    Hs5Report rep = verify_hs5_properties(chain, ctx);
    result["chain"] = chain_json(chain);
    result["pass"] = rep.pass;
    if (!rep.pass) result["violations"] = rep.violations;
    return emit(s, "verify-theorem", result,
                rep.pass ? kExitOk : kExitInvariant, t0);
  }

  ParameterSystem frame = resolve_frame(s, frame_text, ideal_text);
  TestExponentReport rep = test_exponent_estimate(
      c, frame, ctx, s.budgets.t_max, s.budgets.i_max, s.budgets.e_max);
  result["estimate"] = report_json(rep);
  unsigned e_max = std::max(s.budgets.e_max, rep.e0 + 2);

  if (variant == "hs7") {
    if (r_text.empty()) throw DomainError("hs7 needs --r");
    unsigned n1 = n1_opt >= 0 ? static_cast<unsigned>(n1_opt)
                              : rep.m0_used + rep.v0_used;
    CechClass h =
        make_cech_class(parse_poly(r_text, ring), level, frame, ctx);
    Hs7Report rp = verify_cor_hs7(cpoly, h, rep.m0_used, rep.v0_used, n1,
                                  e_max);
    result["n1"] = n1;
    result["outcome"] = rp.outcome == Hs7Outcome::pass      ? "Pass"
                        : rp.outcome == Hs7Outcome::vacuous ? "Vacuous"
                                                            : "Fail";
    int code = rp.outcome == Hs7Outcome::pass      ? kExitOk
               : rp.outcome == Hs7Outcome::vacuous ? kExitInconclusive
                                                   : kExitInvariant;
    return emit(s, "verify-theorem", result, code, t0);
  }

  if (variant != "tc4" && variant != "tc8ii")
    throw DomainError("unknown theorem variant '" + variant + "'");
  std::vector<Poly> gens = parse_poly_list(ideal_text, ring);
  if (gens.empty()) throw DomainError(variant + " needs --ideal");
  bool param = parameter_or_warn(gens, ctx, s.json_out);
  IdealHandle a(ring, gens);

  auto verify_one = [&](const Poly& r) {
    return variant == "tc4"
               ? verify_tc4(c, a, r, ctx, rep, e_max, param)
               : verify_tc8_ii(c, a, r, ctx, rep, e_max, param);
  };

  if (samples == 0) {
    if (r_text.empty()) throw DomainError(variant + " needs --r");
    TheoremVerdict v = verify_one(parse_poly(r_text, ring));
    result["r"] = r_text;
    result["outcome"] = outcome_name(v.outcome);
    if (v.fired_n1) result["fired_n1"] = *v.fired_n1;
    if (v.violated_e) result["violated_e"] = *v.violated_e;
    int code = v.outcome == TheoremOutcome::pass      ? kExitOk
               : v.outcome == TheoremOutcome::vacuous ? kExitInconclusive
                                                      : kExitInvariant;
    return emit(s, "verify-theorem", result, code, t0);
  }

  std::mt19937_64 rng(s.budgets.seed);
  unsigned passes = 0, vacuous = 0, counterexamples = 0;
  json trials = json::array();
  for (unsigned i = 0; i < samples; ++i) {
    Poly r = charp::Poly::zero(ring);
    {
      std::uniform_int_distribution<unsigned> deg(0, 3), terms(1, 4);
      std::uniform_int_distribution<std::uint64_t> coeff(0, ring->p() - 1);
      std::vector<Term> ts;
      unsigned k = terms(rng);
      for (unsigned t = 0; t < k; ++t) {
        Monomial m(ring->nvars());
        unsigned budget = deg(rng);
        for (std::size_t v = 0; v < ring->nvars() && budget; ++v) {
          std::uniform_int_distribution<unsigned> part(0, budget);
          unsigned e = (v + 1 == ring->nvars()) ? budget : part(rng);
          m[v] = e;
          budget -= e;
        }
        ts.push_back(Term{m, coeff(rng)});
      }
      r = Poly(ring, ts);
    }
    TheoremVerdict v = verify_one(r);
    json trial;
    trial["r"] = to_string(r);
    trial["outcome"] = outcome_name(v.outcome);
    trials.push_back(trial);
    if (v.outcome == TheoremOutcome::pass) ++passes;
    if (v.outcome == TheoremOutcome::vacuous) ++vacuous;
    if (v.outcome == TheoremOutcome::counterexample) ++counterexamples;
  }
  result["samples"] = samples;
  result["passes"] = passes;
  result["vacuous"] = vacuous;
  result["counterexamples"] = counterexamples;
  result["trials"] = trials;
  int code = counterexamples ? kExitInvariant
             : passes        ? kExitOk
                             : kExitInconclusive;
  return emit(s, "verify-theorem", result, code, t0);
}

int dispatch(std::vector<std::string> argv);

int run_batch(Session& s, const std::string& tasks_path,
              std::chrono::steady_clock::time_point t0) {
  std::ifstream in(tasks_path);
  if (!in) throw Error("cannot open tasks file '" + tasks_path + "'");
  json tasks = json::parse(in);
  if (!tasks.is_array()) throw Error("tasks file must hold a JSON array");
  json results = json::array();
  int worst = kExitOk;
  for (const auto& task : tasks) {
    std::vector<std::string> argv;
    for (const auto& piece : task) argv.push_back(piece.get<std::string>());
    int code = dispatch(argv);
    json entry;
    entry["argv"] = argv;
    entry["exit_code"] = code;
    results.push_back(entry);
    worst = std::max(worst, code);
  }
  json result;
  result["tasks"] = results;
  return emit(s, "run", result, worst, t0);
}

int dispatch(std::vector<std::string> argv) {
  auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"prime-characteristic commutative algebra toolkit"};
  app.require_subcommand(1);

  Session s;
  s.argv_echo = argv;

  auto add_common = [&](CLI::App* cmd, bool needs_ring = true) {
    auto* opt = cmd->add_option("--ring", s.ring_path, "ring spec file");
    if (needs_ring) opt->required();
    cmd->add_flag("--json", s.json_out, "emit a JSON report");
    cmd->add_option("--t-max", s.budgets.t_max, "level budget");
    cmd->add_option("--e-max", s.budgets.e_max, "Frobenius exponent budget");
    cmd->add_option("--i-max", s.budgets.i_max, "chain step budget");
    cmd->add_option("--k-max", s.budgets.k_max, "zero-test search budget");
    cmd->add_option("--seed", s.budgets.seed, "seed for sampled harnesses");
  };

  std::string gens_text, f_text, r_text, c_text = "1", frame_text,
                                         ideal_text, variant, tasks_path;
  unsigned e = 1, w0 = 0, samples = 0;
  std::uint64_t level = 1;
  int n1 = -1, m0_override = -1;
  bool mod_quotient = false;

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  add_common(gb);
  gb->add_option("gens", gens_text, "ideal generators")->required();
  gb->add_flag("--mod-quotient", mod_quotient,
               "include the quotient generators");

  auto* member = app.add_subcommand("member", "ideal membership in R");
  add_common(member);
  member->add_option("element", f_text)->required();
  member->add_option("gens", gens_text)->required();

  auto* fpow = app.add_subcommand("fpow", "Frobenius power of an ideal");
  add_common(fpow);
  fpow->add_option("gens", gens_text)->required();
  fpow->add_option("--e", e, "exponent")->required();

  auto* froot = app.add_subcommand("froot", "Frobenius root of an ideal");
  add_common(froot);
  froot->add_option("gens", gens_text)->required();
  froot->add_option("--e", e, "exponent")->required();

  auto* fclosure = app.add_subcommand("fclosure", "Frobenius closure in R");
  add_common(fclosure);
  fclosure->add_option("gens", gens_text)->required();

  auto* cech = app.add_subcommand("cech-zero", "Cech class zero test");
  add_common(cech);
  cech->add_option("--r", r_text, "numerator")->required();
  cech->add_option("--t", level, "level");
  cech->add_option("--frame", frame_text, "full system of parameters");

  auto* hsl = app.add_subcommand("hsl", "torsion-killing exponent estimate");
  add_common(hsl);
  hsl->add_option("--frame", frame_text, "full system of parameters");

  auto* stability = app.add_subcommand("stability", "multiplier chains");
  add_common(stability);
  stability->add_option("--c", c_text, "multiplier")->required();
  stability->add_option("--frame", frame_text);
  stability->add_option("--m0", m0_override, "override the torsion exponent");

  auto* tcm = app.add_subcommand("tc-member", "tight-closure evidence");
  add_common(tcm);
  tcm->add_option("--c", c_text, "test element")->required();
  tcm->add_option("--w0", w0, "weak test exponent");
  tcm->add_option("--r", r_text)->required();
  tcm->add_option("--ideal", ideal_text)->required();

  auto* texp = app.add_subcommand("test-exponent", "estimate p^(m0+v0)");
  add_common(texp);
  texp->add_option("--c", c_text)->required();
  texp->add_option("--w0", w0);
  texp->add_option("--frame", frame_text);

  auto* verify = app.add_subcommand("verify-theorem", "verification harness");
  add_common(verify);
  verify->add_option("variant", variant, "tc4 | tc8ii | hs5 | hs7")
      ->required();
  verify->add_option("--c", c_text)->required();
  verify->add_option("--w0", w0);
  verify->add_option("--r", r_text);
  verify->add_option("--ideal", ideal_text);
  verify->add_option("--frame", frame_text);
  verify->add_option("--n1", n1);
  verify->add_option("--t", level, "class level, for hs7");
  verify->add_option("--samples", samples, "randomized trials");

  auto* batch = app.add_subcommand("run", "run a JSON task list");
  add_common(batch, false);
  batch->add_option("tasks", tasks_path, "JSON file with argv arrays")
      ->required();

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& err) {
    std::cerr << err.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (!s.ring_path.empty()) s.ring_file = load_ring_file(s.ring_path);
    if (gb->parsed()) return run_gb(s, gens_text, mod_quotient, t0);
    if (member->parsed()) return run_member(s, f_text, gens_text, t0);
    if (fpow->parsed()) return run_fpow(s, gens_text, e, t0);
    if (froot->parsed()) return run_froot(s, gens_text, e, t0);
    if (fclosure->parsed()) return run_fclosure(s, gens_text, t0);
    if (cech->parsed()) return run_cech_zero(s, r_text, level, frame_text, t0);
    if (hsl->parsed()) return run_hsl(s, frame_text, t0);
    if (stability->parsed())
      return run_stability(s, c_text, frame_text, m0_override, t0);
    if (tcm->parsed())
      return run_tc_member(s, c_text, w0, r_text, ideal_text, t0);
    if (texp->parsed()) return run_test_exponent(s, c_text, w0, frame_text, t0);
    if (verify->parsed())
      return run_verify(s, variant, c_text, w0, r_text, ideal_text,
                        frame_text, n1, samples, level, t0);
    if (batch->parsed()) return run_batch(s, tasks_path, t0);
    return kExitUsage;
  } catch (const ParseError& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const RingMismatch& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const OverflowError& err) {
    std::cerr << "budget: " << err.what() << "\n";
    return kExitInconclusive;
  } catch (const BudgetError& err) {
    std::cerr << "budget: " << err.what() << "\n";
    return kExitInconclusive;
  } catch (const Error& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(std::move(args));
}
