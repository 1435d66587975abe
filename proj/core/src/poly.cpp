#include "charp/poly.hpp"

#include <algorithm>
#include <map>

namespace charp {

void Poly::check_ring(const Poly& o) const {
  if (!same_ring(ring_, o.ring_))
    throw RingMismatch("polynomials live in different rings");
}

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const std::uint64_t p = ring_->p();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring_->compare(a.mono, b.mono) > 0;
  });
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    std::uint64_t c = t.coeff % p;
    if (t.mono.nvars() != ring_->nvars())
      throw RingMismatch("monomial arity does not match ring");
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      std::uint64_t s = fp_add(terms_.back().coeff, c, p);
      if (s == 0)
        terms_.pop_back();
      else
        terms_.back().coeff = s;
    } else if (c != 0) {
      terms_.push_back(Term{std::move(t.mono), c});
    }
  }
}

Poly Poly::constant(const RingPtr& ring, std::uint64_t c) {
  return Poly(ring, {Term{Monomial(ring->nvars()), c}});
}

Poly Poly::variable(const RingPtr& ring, std::size_t i) {
  Monomial m(ring->nvars());
  m[i] = 1;
  return Poly(ring, {Term{std::move(m), 1}});
}

Poly Poly::monomial(const RingPtr& ring, Monomial m, std::uint64_t c) {
  return Poly(ring, {Term{std::move(m), c}});
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_.front();
}

std::uint64_t Poly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  check_ring(o);
  const std::uint64_t p = ring_->p();
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ring_->compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      std::uint64_t s = fp_add(terms_[i].coeff, o.terms_[j].coeff, p);
      if (s) r.terms_.push_back(Term{terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::operator-() const {
  const std::uint64_t p = ring_->p();
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff = fp_neg(t.coeff, p);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::times_term(const Term& t) const {
  const std::uint64_t p = ring_->p();
  Poly r(ring_);
  if (t.coeff % p == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& s : terms_) {
    std::uint64_t c = fp_mul(s.coeff, t.coeff, p);
    if (c) r.terms_.push_back(Term{s.mono * t.mono, c});
  }
  return r;  // order is preserved by multiplication with a fixed monomial
}

Poly Poly::operator*(const Poly& o) const {
  check_ring(o);
  const std::uint64_t p = ring_->p();
  // Accumulate into an ordered map keyed by the ring order.
  auto cmp = [this](const Monomial& a, const Monomial& b) {
    return ring_->compare(a, b) > 0;
  };
  std::map<Monomial, std::uint64_t, decltype(cmp)> acc(cmp);
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      std::uint64_t c = fp_mul(a.coeff, b.coeff, p);
      auto it = acc.find(m);
      if (it == acc.end()) {
        if (c) acc.emplace(std::move(m), c);
      } else {
        it->second = fp_add(it->second, c, p);
        if (it->second == 0) acc.erase(it);
      }
    }
  Poly r(ring_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) r.terms_.push_back(Term{m, c});
  return r;
}

Poly Poly::scaled(std::uint64_t c) const {
  const std::uint64_t p = ring_->p();
  c %= p;
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{t.mono, fp_mul(t.coeff, c, p)});
  return r;
}

Poly Poly::pow(std::uint64_t k) const {
  Poly base = *this;
  Poly r = Poly::constant(ring_, 1);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Poly Poly::frobenius(unsigned e) const {
  // (sum c_a x^a)^(p^e) = sum c_a x^(a p^e) in characteristic p, and
  // c^(p^e) = c on F_p.
  FrobeniusExponent fe(ring_->characteristic(), e);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono.pow(fe.q()), t.coeff});
  return r;  // exponent scaling preserves every standard order
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(fp_inv(terms_.front().coeff, ring_->p()));
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff ||
        !(a.terms_[i].mono == b.terms_[i].mono))
      return false;
  return true;
}

FrobeniusExponent::FrobeniusExponent(const PrimeChar& characteristic,
                                     unsigned e)
    : e_(e), q_(1) {
  const std::uint64_t p = characteristic.value();
  for (unsigned i = 0; i < e; ++i) {
    if (q_ > 0x7fffffffull / p)
      throw OverflowError("p^e overflows the exponent range (p=" +
                          std::to_string(p) + ", e=" + std::to_string(e) + ")");
    q_ *= p;
  }
}

}  // namespace charp
