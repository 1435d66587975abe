#ifndef CHARP_POLY_HPP
#define CHARP_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "charp/ring.hpp"

namespace charp {

struct Term {
  Monomial mono;
  std::uint64_t coeff = 0;  // least non-negative residue, nonzero when stored
};

// Element of F_p[x_1..x_n] in canonical form: terms sorted decreasingly
// under the ring order, no zero coefficients.  Immutable value type.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  // Normalizes: merges duplicate monomials, drops zeros, sorts.
  Poly(RingPtr ring, std::vector<Term> terms);

  static Poly zero(const RingPtr& ring) { return Poly(ring); }
  static Poly constant(const RingPtr& ring, std::uint64_t c);
  static Poly variable(const RingPtr& ring, std::size_t i);
  static Poly monomial(const RingPtr& ring, Monomial m, std::uint64_t c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }

  const Term& leading_term() const;
  std::uint64_t total_degree() const;  // 0 for the zero polynomial

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;

  Poly scaled(std::uint64_t c) const;            // c * this
  Poly times_term(const Term& t) const;          // t * this, checked exponents
  Poly pow(std::uint64_t k) const;               // this^k
  Poly frobenius(unsigned e) const;              // this^(p^e), term-wise
  Poly monic() const;                            // unit multiple, lead coeff 1

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void check_ring(const Poly& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

// q = p^e with overflow checked at construction.
class FrobeniusExponent {
 public:
  FrobeniusExponent(const PrimeChar& characteristic, unsigned e);

  unsigned e() const { return e_; }
  std::uint64_t q() const { return q_; }

 private:
  unsigned e_;
  std::uint64_t q_;
};

}  // namespace charp

#endif
