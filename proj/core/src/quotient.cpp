#include "charp/quotient.hpp"

namespace charp {

QuotientCtx::QuotientCtx(RingPtr ambient, IdealHandle defining,
                         RingFlags flags)
    : ambient_(std::move(ambient)), j_(std::move(defining)), flags_(flags) {
  if (!same_ring(ambient_, j_.ring()))
    throw RingMismatch("defining ideal lives in a different ring");
  if (j_.is_unit_ideal())
    throw DomainError("defining ideal must be proper");
  dim_ = lt_ideal_dimension(j_);
}

QuotientCtx make_quotient(RingPtr ambient, IdealHandle defining,
                          RingFlags flags) {
  return QuotientCtx(std::move(ambient), std::move(defining), flags);
}

bool QuotientCtx::member_mod(const Poly& f, const IdealHandle& I) const {
  return lift(I).contains(f);
}

IdealHandle QuotientCtx::lift(const IdealHandle& I) const {
  return ideal_sum(I, j_);
}

Poly QuotientCtx::reduce(const Poly& f) const { return j_.normal_form(f); }

bool is_nonzerodivisor(const Poly& c, const QuotientCtx& ctx) {
  if (ctx.defining_ideal().contains(c))
    throw DomainError("element is zero in the quotient ring");
  return ideal_colon(ctx.defining_ideal(), c) == ctx.defining_ideal();
}

ParameterSystem validate_parameter_ideal(const std::vector<Poly>& gens,
                                         const QuotientCtx& ctx) {
  if (ctx.dim() == 0)
    throw DomainError("parameter ideals need a context of dimension > 0");
  if (gens.empty()) return ParameterSystem{{}, false};
  if (gens.size() > ctx.dim())
    throw DomainError("more generators than the dimension allows");
  for (const Poly& g : gens)
    if (g.is_zero()) throw DomainError("zero parameter element");

  IdealHandle sum = ideal_sum(ctx.defining_ideal(), gens);
  std::size_t achieved;
  if (sum.is_unit_ideal()) {
    throw DomainError("parameters generate the unit ideal modulo J");
  } else {
    achieved = ctx.dim() - lt_ideal_dimension(sum);
  }
  if (achieved != gens.size())
    throw DomainError("height deficiency: " + std::to_string(gens.size()) +
                      " parameters drop the dimension by only " +
                      std::to_string(achieved));
  return ParameterSystem{gens, gens.size() == ctx.dim()};
}

}  // namespace charp
