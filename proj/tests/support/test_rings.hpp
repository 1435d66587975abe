#ifndef CHARP_TESTS_TEST_RINGS_HPP
#define CHARP_TESTS_TEST_RINGS_HPP

#include <random>

#include "charp/parse.hpp"
#include "charp/quotient.hpp"

namespace charp::testing {

// F_p[x,y], the regular model.
inline QuotientCtx regular_ctx(std::uint64_t p) {
  RingPtr ring = make_ring(p, {"x", "y"});
  return QuotientCtx(ring, IdealHandle(ring),
                     RingFlags{true, true, true});
}

// F_p[x,y,z]/(x^3+y^3+z^3).
inline QuotientCtx fermat_ctx(std::uint64_t p) {
  RingPtr ring = make_ring(p, {"x", "y", "z"});
  IdealHandle j(ring, {parse_poly("x^3+y^3+z^3", ring)});
  return QuotientCtx(ring, j, RingFlags{true, true, true});
}

// F_p[x,y]/(xy), a non-domain edge case.
inline QuotientCtx monomial_ctx(std::uint64_t p) {
  RingPtr ring = make_ring(p, {"x", "y"});
  IdealHandle j(ring, {parse_poly("x*y", ring)});
  return QuotientCtx(ring, j, RingFlags{false, true, true});
}

inline ParameterSystem frame_of(const QuotientCtx& ctx,
                                const std::string& gens) {
  return validate_parameter_ideal(parse_poly_list(gens, ctx.ambient()), ctx);
}

// Random polynomial of total degree <= max_deg with <= max_terms terms.
inline Poly random_poly(const RingPtr& ring, std::mt19937_64& rng,
                        unsigned max_deg, unsigned max_terms) {
  std::uniform_int_distribution<unsigned> nterms(0, max_terms);
  std::uniform_int_distribution<std::uint64_t> coeff(0, ring->p() - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::vector<Term> terms;
  unsigned k = nterms(rng);
  for (unsigned t = 0; t < k; ++t) {
    Monomial m(ring->nvars());
    unsigned budget = deg(rng);
    for (std::size_t i = 0; i < ring->nvars() && budget; ++i) {
      std::uniform_int_distribution<unsigned> part(0, budget);
      unsigned e = (i + 1 == ring->nvars()) ? budget : part(rng);
      m[i] = e;
      budget -= e;
    }
    terms.push_back(Term{std::move(m), coeff(rng)});
  }
  return Poly(ring, std::move(terms));
}

inline Poly random_nonzero_poly(const RingPtr& ring, std::mt19937_64& rng,
                                unsigned max_deg, unsigned max_terms) {
  for (;;) {
    Poly f = random_poly(ring, rng, max_deg, max_terms);
    if (!f.is_zero()) return f;
  }
}

inline IdealHandle random_ideal(const RingPtr& ring, std::mt19937_64& rng,
                                unsigned ngens, unsigned max_deg,
                                unsigned max_terms) {
  std::vector<Poly> gens;
  for (unsigned i = 0; i < ngens; ++i)
    gens.push_back(random_nonzero_poly(ring, rng, max_deg, max_terms));
  return IdealHandle(ring, std::move(gens));
}

}  // namespace charp::testing

#endif
