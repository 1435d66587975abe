#include "charp/stability.hpp"

#include "charp/frobsolve.hpp"

namespace charp {

namespace {

void require_chain_ctx(const Poly& c, const QuotientCtx& ctx) {
  if (!ctx.flags().is_cm)
    throw DomainError(
        "stability chains are supported only under the Cohen-Macaulay "
        "assertion");
  if (c.is_zero()) throw DomainError("c must be nonzero");
}

}  // namespace

std::vector<IdealHandle> n_chain_level(const Poly& c, std::uint64_t t,
                                       const ParameterSystem& frame,
                                       const QuotientCtx& ctx, unsigned m0,
                                       unsigned i_max) {
  require_chain_ctx(c, ctx);
  if (!frame.full) throw DomainError("need a full system of parameters");
  FrobeniusSolver solver(ctx.defining_ideal(), c.frobenius(m0), true);
  IdealHandle frame_t = frame.power_ideal(ctx.ambient(), t);
  std::vector<IdealHandle> chain;
  chain.reserve(i_max + 1);
  for (unsigned i = 0; i <= i_max; ++i)
    chain.push_back(solver.solutions(frame_t, m0 + i));
  return chain;
}

StabilityChain stability_index(const Poly& c, const ParameterSystem& frame,
                               const QuotientCtx& ctx, std::uint64_t t_max,
                               unsigned i_max, unsigned m0) {
  require_chain_ctx(c, ctx);
  if (t_max < 1) throw DomainError("stability_index needs t_max >= 1");
  if (i_max < 2) throw DomainError("stability_index needs i_max >= 2");
  if (!is_nonzerodivisor(c, ctx))
    throw DomainError("c must be a nonzerodivisor in the quotient");

  StabilityChain out;
  out.c = c;
  out.m0_used = m0;
  out.t_max = t_max;
  out.i_max = i_max;
  for (std::uint64_t t = 1; t <= t_max; ++t)
    out.per_level[t] = n_chain_level(c, t, frame, ctx, m0, i_max);

  // Least i with N_i = N_{i+1} = N_{i+2} at every level computed with
  // levels up to bound; used for both the result and the stabilized flag.
  auto v0_up_to = [&](std::uint64_t bound) -> std::optional<unsigned> {
    for (unsigned i = 0; i + 2 <= i_max; ++i) {
      bool ok = true;
      for (std::uint64_t t = 1; t <= bound && ok; ++t) {
        const auto& ch = out.per_level[t];
        ok = ch[i] == ch[i + 1] && ch[i + 1] == ch[i + 2];
      }
      if (ok) return i;
    }
    return std::nullopt;
  };

  std::optional<unsigned> v0 = v0_up_to(t_max);
  out.stationary = v0.has_value();
  out.v0_empirical = v0.value_or(i_max);
  if (t_max >= 2) {
    std::optional<unsigned> prev = v0_up_to(t_max - 1);
    out.stabilized = v0.has_value() && prev == v0;
  }
  return out;
}

Hs5Report verify_hs5_properties(const StabilityChain& chain,
                                const QuotientCtx& ctx) {
  Hs5Report report;
  auto fail = [&](const std::string& msg) {
    report.pass = false;
    report.violations.push_back(msg);
  };

  for (const auto& [t, ch] : chain.per_level) {
    for (std::size_t i = 0; i + 1 < ch.size(); ++i)
      if (!ch[i].contains(ch[i + 1]))
        fail("containment N_" + std::to_string(i + 1) + " <= N_" +
             std::to_string(i) + " fails at level " + std::to_string(t));
    std::optional<std::size_t> first_eq;
    for (std::size_t i = 0; i + 1 < ch.size(); ++i)
      if (ch[i] == ch[i + 1]) {
        first_eq = i;
        break;
      }
    if (first_eq)
      for (std::size_t j = *first_eq + 1; j < ch.size(); ++j)
        if (!(ch[j] == ch[*first_eq]))
          fail("chain moved again after first equality at level " +
               std::to_string(t) + ", step " + std::to_string(j));
  }

  // Terminal ideal is closed under the x-action: r in N_v0(t) implies the
  // class of r^p at level tp lies in N_v0(tp), whenever both levels were
  // computed.
  if (chain.stationary) {
    const std::uint64_t p = ctx.ambient()->p();
    for (const auto& [t, ch] : chain.per_level) {
      std::uint64_t tp = t * p;
      auto it = chain.per_level.find(tp);
      if (it == chain.per_level.end()) continue;
      const IdealHandle& terminal_t = ch[chain.v0_empirical];
      const IdealHandle& terminal_tp = it->second[chain.v0_empirical];
      for (const Poly& r : terminal_t.basis())
        if (!terminal_tp.contains(r.frobenius(1)))
          fail("terminal ideal not x-stable from level " + std::to_string(t) +
               " to " + std::to_string(tp));
    }
  }
  return report;
}

Hs7Report verify_cor_hs7(const Poly& c, const CechClass& h, unsigned m0,
                         unsigned v0, unsigned n1, unsigned e_max) {
  if (n1 < m0 + v0)
    throw DomainError("verify_cor_hs7 needs n1 >= m0 + v0");
  require_chain_ctx(c, h.ctx);
  FrobeniusSolver solver(h.ctx.defining_ideal(), c.frobenius(m0), true);
  IdealHandle frame_t = h.frame.power_ideal(h.ctx.ambient(), h.level);

  if (!solver.contains(frame_t, n1, h.numerator))
    return Hs7Report{Hs7Outcome::vacuous, std::nullopt};
  for (unsigned n = m0; n <= e_max; ++n)
    if (!solver.contains(frame_t, n, h.numerator))
      return Hs7Report{Hs7Outcome::fail, n};
  return Hs7Report{Hs7Outcome::pass, std::nullopt};
}

}  // namespace charp
