#include "charp/cech.hpp"

#include "charp/frobsolve.hpp"

namespace charp {

CechClass make_cech_class(Poly numerator, std::uint64_t level,
                          ParameterSystem frame, QuotientCtx ctx) {
  if (!frame.full)
    throw DomainError("Cech classes need a full system of parameters");
  if (frame.elems.empty())
    throw DomainError("empty parameter frame");
  if (!same_ring(numerator.ring(), ctx.ambient()))
    throw RingMismatch("numerator from a different ring");
  return CechClass{std::move(numerator), level, std::move(frame),
                   std::move(ctx)};
}

ZeroTest cech_is_zero(const CechClass& h, unsigned k_max) {
  const RingPtr& ring = h.ctx.ambient();
  IdealHandle level0 = h.ctx.lift(h.frame.power_ideal(ring, h.level));
  if (level0.contains(h.numerator)) return ZeroTest{ZeroState::zero, 0};
  if (h.ctx.flags().is_cm)
    return ZeroTest{ZeroState::nonzero_certified, 0};
  Poly pk = Poly::constant(ring, 1);
  const Poly product = h.frame.product(ring);
  for (unsigned k = 1; k <= k_max; ++k) {
    pk = pk * product;
    IdealHandle target = h.ctx.lift(h.frame.power_ideal(ring, h.level + k));
    if (target.contains(pk * h.numerator)) return ZeroTest{ZeroState::zero, k};
  }
  return ZeroTest{ZeroState::nonzero_up_to_bound, 0};
}

CechClass cech_x_action(const CechClass& h) {
  const std::uint64_t p = h.ctx.ambient()->p();
  if (h.level > 0x7fffffffull / p)
    throw OverflowError("Cech level overflow under the x-action");
  CechClass out = h;
  out.numerator = h.numerator.frobenius(1);
  out.level = h.level * p;
  return out;
}

CechClass cech_scalar_mul(const Poly& r, const CechClass& h) {
  if (!same_ring(r.ring(), h.ctx.ambient()))
    throw RingMismatch("scalar from a different ring");
  CechClass out = h;
  out.numerator = r * h.numerator;
  return out;
}

CechClass cech_raise_level(const CechClass& h, std::uint64_t t2) {
  if (t2 < h.level) throw DomainError("cannot lower a Cech level");
  CechClass out = h;
  out.numerator =
      h.numerator * h.frame.product(h.ctx.ambient()).pow(t2 - h.level);
  out.level = t2;
  return out;
}

namespace {

void check_same_presentation(const CechClass& a, const CechClass& b) {
  bool ok = same_ring(a.ctx.ambient(), b.ctx.ambient()) &&
            a.frame.elems.size() == b.frame.elems.size() &&
            a.ctx.defining_ideal().basis() == b.ctx.defining_ideal().basis();
  for (std::size_t i = 0; ok && i < a.frame.elems.size(); ++i)
    ok = a.frame.elems[i] == b.frame.elems[i];
  if (!ok)
    throw RingMismatch("Cech classes use different presentations");
}

}  // namespace

CechClass cech_add(const CechClass& a, const CechClass& b) {
  check_same_presentation(a, b);
  std::uint64_t t = std::max(a.level, b.level);
  CechClass ra = cech_raise_level(a, t);
  CechClass rb = cech_raise_level(b, t);
  ra.numerator = ra.numerator + rb.numerator;
  return ra;
}

bool cech_equal(const CechClass& a, const CechClass& b, unsigned k_max) {
  check_same_presentation(a, b);
  std::uint64_t t = std::max(a.level, b.level);
  CechClass ra = cech_raise_level(a, t);
  CechClass rb = cech_raise_level(b, t);
  ra.numerator = ra.numerator - rb.numerator;
  ZeroTest z = cech_is_zero(ra, k_max);
  if (z.state == ZeroState::nonzero_up_to_bound)
    throw BudgetError("class equality undecided within k_max");
  return z.is_zero();
}

std::optional<unsigned> torsion_order(const CechClass& h, unsigned e_max,
                                      unsigned k_max) {
  const RingPtr& ring = h.ctx.ambient();
  if (h.ctx.flags().is_cm) {
    FrobeniusSolver solver(h.ctx.defining_ideal(), Poly::constant(ring, 1),
                           true);
    IdealHandle frame_t = h.frame.power_ideal(ring, h.level);
    for (unsigned j = 0; j <= e_max; ++j)
      if (solver.contains(frame_t, j, h.numerator)) return j;
    return std::nullopt;
  }
  CechClass cur = h;
  for (unsigned j = 0; j <= e_max; ++j) {
    if (cech_is_zero(cur, k_max).is_zero()) return j;
    if (j < e_max) cur = cech_x_action(cur);
  }
  return std::nullopt;
}

GammaLevel gamma_x_level(std::uint64_t t, const ParameterSystem& frame,
                         const QuotientCtx& ctx, unsigned e_max) {
  if (!ctx.flags().is_cm)
    throw DomainError(
        "x-torsion extraction is supported only under the Cohen-Macaulay "
        "assertion");
  if (!frame.full) throw DomainError("need a full system of parameters");
  IdealHandle frame_t = frame.power_ideal(ctx.ambient(), t);
  ClosureResult closure =
      frobenius_closure(frame_t, e_max, ctx.defining_ideal(), true);
  return GammaLevel{closure.closure,
                    closure.state == ClosureState::truncated,
                    closure.stabilized_at};
}

HslEstimate hsl_estimate(const ParameterSystem& frame, const QuotientCtx& ctx,
                         std::uint64_t t_max, unsigned e_max) {
  if (t_max < 1) throw DomainError("hsl_estimate needs t_max >= 1");
  HslEstimate out;
  out.t_max = t_max;
  FrobeniusSolver solver(ctx.defining_ideal(),
                         Poly::constant(ctx.ambient(), 1), true);
  std::vector<unsigned> running_max;
  for (std::uint64_t t = 1; t <= t_max; ++t) {
    GammaLevel gamma = gamma_x_level(t, frame, ctx, e_max);
    if (gamma.truncated) out.truncated = true;
    IdealHandle frame_t = frame.power_ideal(ctx.ambient(), t);
    std::optional<unsigned> killer;
    for (unsigned e = 0; e <= e_max; ++e) {
      if (solver.solutions(frame_t, e).contains(gamma.numerator)) {
        killer = e;
        break;
      }
    }
    if (!killer) {
      out.truncated = true;
      killer = e_max;
    }
    out.m0_lower = std::max(out.m0_lower, *killer);
    running_max.push_back(out.m0_lower);
  }
  std::size_t n = running_max.size();
  out.stabilized = n >= 3 && running_max[n - 1] == running_max[n - 2] &&
                   running_max[n - 2] == running_max[n - 3];
  return out;
}

}  // namespace charp
