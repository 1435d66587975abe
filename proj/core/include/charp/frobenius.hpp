#ifndef CHARP_FROBENIUS_HPP
#define CHARP_FROBENIUS_HPP

#include <optional>

#include "charp/ideal.hpp"

namespace charp {

// a^[p^e], generated by the p^e-th powers of the generators.
IdealHandle frobenius_power(const IdealHandle& I, const FrobeniusExponent& e);

// Decomposition f = sum_mu (c_mu)^(p^e) * mu over the monomial basis with
// exponents < p^e; returns the nonzero components c_mu.
std::vector<Poly> root_components(const Poly& f, const FrobeniusExponent& e);

// Smallest ideal K with I contained in K^[p^e]; computed by decomposing the
// reduced Groebner basis of I.
IdealHandle frobenius_root(const IdealHandle& I, const FrobeniusExponent& e);

enum class ClosureState { stabilized, truncated, unit };

struct ClosureResult {
  IdealHandle closure;          // last computed stage of the chain
  ClosureState state;
  std::optional<unsigned> stabilized_at;  // first e with stage(e) == stage(e-1)
};

// Frobenius closure chain of I in the quotient by J (J may be the zero
// ideal): stage(e) = { r : r^(p^e) in I^[p^e] + J }, for e = 0..e_max.
// `frame_regular` asserts that J is a complete-intersection presentation
// and the generators of J followed by those of I form a regular sequence;
// this enables the multiplier fast path.  Otherwise a Frobenius-preimage
// fallback is used, which is budget-limited.
ClosureResult frobenius_closure(const IdealHandle& I, unsigned e_max,
                                const IdealHandle& J, bool frame_regular);
ClosureResult frobenius_closure(const IdealHandle& I, unsigned e_max);

// Least e <= e_max with r^(p^e) in I^[p^e] + J, if any.
std::optional<unsigned> frobenius_membership(const Poly& r,
                                             const IdealHandle& I,
                                             unsigned e_max,
                                             const IdealHandle& J);
std::optional<unsigned> frobenius_membership(const Poly& r,
                                             const IdealHandle& I,
                                             unsigned e_max);

}  // namespace charp

#endif
