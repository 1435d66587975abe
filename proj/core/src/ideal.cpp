#include "charp/ideal.hpp"

#include <algorithm>
#include <bit>

#include "charp/groebner.hpp"

namespace charp {

IdealHandle::IdealHandle(RingPtr ring, std::vector<Poly> gens)
    : state_(new State{std::move(ring), {}, {}, {}}) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), state_->ring))
      throw RingMismatch("generator from a different ring");
    state_->gens.push_back(std::move(g));
  }
}

const std::vector<Poly>& IdealHandle::basis() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  if (!state_->gb)
    state_->gb = reduced_groebner_basis(state_->ring, state_->gens);
  return *state_->gb;
}

Poly IdealHandle::normal_form(const Poly& f) const {
  if (!same_ring(f.ring(), state_->ring))
    throw RingMismatch("normal form of element from a different ring");
  return division_remainder(f, basis());
}

bool IdealHandle::contains(const Poly& f) const {
  return normal_form(f).is_zero();
}

bool IdealHandle::contains(const IdealHandle& other) const {
  for (const Poly& g : other.gens())
    if (!contains(g)) return false;
  return true;
}

bool IdealHandle::is_unit_ideal() const {
  const auto& b = basis();
  return b.size() == 1 && b[0].is_unit();
}

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw RingMismatch("sum of ideals from different rings");
  std::vector<Poly> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_sum(const IdealHandle& a, const std::vector<Poly>& extra) {
  std::vector<Poly> gens = a.gens();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return IdealHandle(a.ring(), std::move(gens));
}

namespace {

Poly lift(const Poly& f, const RingPtr& ext, std::size_t shift) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m(ext->nvars());
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) m[shift + i] = t.mono[i];
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return Poly(ext, std::move(terms));
}

// Drops the first `shift` variables; caller guarantees they do not occur.
Poly project(const Poly& f, const RingPtr& base, std::size_t shift) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m(base->nvars());
    for (std::size_t i = 0; i < base->nvars(); ++i) m[i] = t.mono[shift + i];
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return Poly(base, std::move(terms));
}

bool tag_free(const Poly& f, std::size_t tags) {
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < tags; ++i)
      if (t.mono[i]) return false;
  return true;
}

}  // namespace

IdealHandle ideal_intersect(const IdealHandle& I, const IdealHandle& K) {
  if (!same_ring(I.ring(), K.ring()))
    throw RingMismatch("intersection of ideals from different rings");
  const RingPtr& ring = I.ring();
  if (I.is_zero_ideal() || K.is_zero_ideal()) return IdealHandle(ring);

  RingPtr ext = prepend_tag_vars(ring, 1);
  Poly t = Poly::variable(ext, 0);
  Poly one_minus_t = Poly::constant(ext, 1) - t;
  std::vector<Poly> gens;
  for (const Poly& f : I.gens()) gens.push_back(t * lift(f, ext, 1));
  for (const Poly& g : K.gens()) gens.push_back(one_minus_t * lift(g, ext, 1));

  std::vector<Poly> out;
  for (const Poly& b : reduced_groebner_basis(ext, std::move(gens)))
    if (tag_free(b, 1)) out.push_back(project(b, ring, 1));
  return IdealHandle(ring, std::move(out));
}

IdealHandle ideal_colon(const IdealHandle& I, const Poly& f) {
  if (f.is_zero()) throw DomainError("colon by the zero element");
  if (!same_ring(I.ring(), f.ring()))
    throw RingMismatch("colon by element of a different ring");
  const RingPtr& ring = I.ring();
  if (I.is_zero_ideal()) return IdealHandle(ring);
  IdealHandle cap = ideal_intersect(I, IdealHandle(ring, {f}));
  std::vector<Poly> gens;
  for (const Poly& g : cap.gens()) gens.push_back(exact_quotient(g, f));
  return IdealHandle(ring, std::move(gens));
}

IdealHandle ideal_colon(const IdealHandle& I, const IdealHandle& K) {
  const auto& gens = K.basis();
  if (gens.empty()) {
    // (I : 0) is the unit ideal.
    return IdealHandle(I.ring(), {Poly::constant(I.ring(), 1)});
  }
  IdealHandle acc = ideal_colon(I, gens[0]);
  for (std::size_t i = 1; i < gens.size(); ++i)
    acc = ideal_intersect(acc, ideal_colon(I, gens[i]));
  return acc;
}

bool radical_membership(const Poly& f, const IdealHandle& I) {
  if (!same_ring(f.ring(), I.ring()))
    throw RingMismatch("radical membership across rings");
  if (f.is_zero()) return true;
  const RingPtr& ring = I.ring();
  RingPtr ext = prepend_tag_vars(ring, 1);
  std::vector<Poly> gens;
  for (const Poly& g : I.gens()) gens.push_back(lift(g, ext, 1));
  gens.push_back(Poly::constant(ext, 1) -
                 Poly::variable(ext, 0) * lift(f, ext, 1));
  auto gb = reduced_groebner_basis(ext, std::move(gens));
  return gb.size() == 1 && gb[0].is_unit();
}

std::size_t lt_ideal_dimension(const IdealHandle& I) {
  if (I.is_unit_ideal()) throw DomainError("dimension of the unit ideal");
  const std::size_t n = I.ring()->nvars();
  if (n > 24) throw BudgetError("dimension search limited to 24 variables");

  std::vector<std::uint32_t> supports;
  for (const Poly& g : I.basis()) {
    std::uint32_t mask = 0;
    const Monomial& m = g.leading_term().mono;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) mask |= (1u << i);
    supports.push_back(mask);
  }

  // A variable set is independent iff it contains no generator's support.
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool independent = true;
    for (std::uint32_t m : supports)
      if ((m & s) == m) {
        independent = false;
        break;
      }
    if (independent)
      best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

}  // namespace charp
