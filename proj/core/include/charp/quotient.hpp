#ifndef CHARP_QUOTIENT_HPP
#define CHARP_QUOTIENT_HPP

#include <vector>

#include "charp/ideal.hpp"

namespace charp {

// User assertions about R = S/J that are not machine-checked here; they
// are recorded verbatim in every report that depends on them.
struct RingFlags {
  bool is_domain = false;
  bool is_cm = false;
  bool is_equidim_excellent = false;
};

// Working context for R = S/J at the graded maximal ideal.  Immutable.
class QuotientCtx {
 public:
  QuotientCtx(RingPtr ambient, IdealHandle defining, RingFlags flags);

  const RingPtr& ambient() const { return ambient_; }
  const IdealHandle& defining_ideal() const { return j_; }
  std::size_t dim() const { return dim_; }
  const RingFlags& flags() const { return flags_; }

  // Membership in the image of I, i.e. f in I + J.
  bool member_mod(const Poly& f, const IdealHandle& I) const;

  IdealHandle lift(const IdealHandle& I) const;  // I + J
  Poly reduce(const Poly& f) const;              // normal form mod J

 private:
  RingPtr ambient_;
  IdealHandle j_;
  std::size_t dim_;
  RingFlags flags_;
};

QuotientCtx make_quotient(RingPtr ambient, IdealHandle defining,
                          RingFlags flags);

// (J : c) = J test; for reduced rings this is the implementable proxy for
// membership in the complement of the minimal primes.
bool is_nonzerodivisor(const Poly& c, const QuotientCtx& ctx);

// Part of a system of parameters, validated by dimension drop.
struct ParameterSystem {
  std::vector<Poly> elems;
  bool full = false;  // |elems| == dim R

  IdealHandle ideal(const RingPtr& ring) const {
    return IdealHandle(ring, elems);
  }
  // (a_1^t, ..., a_d^t)
  IdealHandle power_ideal(const RingPtr& ring, std::uint64_t t) const {
    std::vector<Poly> gens;
    gens.reserve(elems.size());
    for (const Poly& a : elems) gens.push_back(a.pow(t));
    return IdealHandle(ring, std::move(gens));
  }
  Poly product(const RingPtr& ring) const {
    Poly r = Poly::constant(ring, 1);
    for (const Poly& a : elems) r = r * a;
    return r;
  }
};

// Accepts gens iff dim(S/(J + gens)) == dim(S/J) - |gens|; throws
// DomainError otherwise, reporting the achieved drop.
ParameterSystem validate_parameter_ideal(const std::vector<Poly>& gens,
                                         const QuotientCtx& ctx);

}  // namespace charp

#endif
