#ifndef CHARP_GROEBNER_HPP
#define CHARP_GROEBNER_HPP

#include <span>
#include <vector>

#include "charp/poly.hpp"

namespace charp {

// Remainder of f under full multivariate division by `divisors` (no term of
// the remainder is divisible by any leading monomial).  Divisors must be
// nonzero and share f's ring.
Poly division_remainder(const Poly& f, std::span<const Poly> divisors);

// Exact quotient f / g; throws DomainError if g does not divide f.
Poly exact_quotient(const Poly& f, const Poly& g);

// Buchberger with the coprimality and chain criteria and normal pair
// selection (minimal lcm degree, ties by the monomial order).  Returns the
// unique reduced basis.
std::vector<Poly> reduced_groebner_basis(const RingPtr& ring,
                                         std::vector<Poly> gens);

}  // namespace charp

#endif
