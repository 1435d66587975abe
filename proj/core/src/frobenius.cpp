#include "charp/frobenius.hpp"

#include <map>

#include "charp/frobsolve.hpp"

namespace charp {

IdealHandle frobenius_power(const IdealHandle& I, const FrobeniusExponent& e) {
  std::vector<Poly> gens;
  gens.reserve(I.gens().size());
  for (const Poly& g : I.gens()) gens.push_back(g.frobenius(e.e()));
  return IdealHandle(I.ring(), std::move(gens));
}

std::vector<Poly> root_components(const Poly& f, const FrobeniusExponent& e) {
  const RingPtr& ring = f.ring();
  const std::uint64_t q = e.q();
  auto cmp = [&ring](const Monomial& a, const Monomial& b) {
    return ring->compare(a, b) < 0;
  };
  std::map<Monomial, std::vector<Term>, decltype(cmp)> buckets(cmp);
  for (const auto& t : f.terms()) {
    Monomial residue(ring->nvars());
    Monomial root(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      residue[i] = static_cast<std::uint32_t>(t.mono[i] % q);
      root[i] = static_cast<std::uint32_t>(t.mono[i] / q);
    }
    // Coefficients are their own p^e-th roots on F_p.
    buckets[residue].push_back(Term{std::move(root), t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& [residue, terms] : buckets)
    out.push_back(Poly(ring, std::move(terms)));
  return out;
}

IdealHandle frobenius_root(const IdealHandle& I, const FrobeniusExponent& e) {
  std::vector<Poly> gens;
  for (const Poly& g : I.basis())
    for (Poly& c : root_components(g, e)) gens.push_back(std::move(c));
  return IdealHandle(I.ring(), std::move(gens));
}

ClosureResult frobenius_closure(const IdealHandle& I, unsigned e_max,
                                const IdealHandle& J, bool frame_regular) {
  if (e_max < 1) throw DomainError("frobenius_closure needs e_max >= 1");
  FrobeniusSolver solver(J, Poly::constant(I.ring(), 1), frame_regular);

  IdealHandle prev = solver.solutions(I, 0);  // I + J
  if (prev.is_unit_ideal())
    return ClosureResult{prev, ClosureState::unit, std::nullopt};
  for (unsigned e = 1; e <= e_max; ++e) {
    IdealHandle cur = solver.solutions(I, e);
    if (cur == prev) return ClosureResult{cur, ClosureState::stabilized, e - 1};
    prev = cur;
  }
  return ClosureResult{prev, ClosureState::truncated, std::nullopt};
}

ClosureResult frobenius_closure(const IdealHandle& I, unsigned e_max) {
  return frobenius_closure(I, e_max, IdealHandle(I.ring()), true);
}

std::optional<unsigned> frobenius_membership(const Poly& r,
                                             const IdealHandle& I,
                                             unsigned e_max,
                                             const IdealHandle& J) {
  FrobeniusSolver solver(J, Poly::constant(I.ring(), 1), false);
  for (unsigned e = 0; e <= e_max; ++e)
    if (solver.contains(I, e, r)) return e;
  return std::nullopt;
}

std::optional<unsigned> frobenius_membership(const Poly& r,
                                             const IdealHandle& I,
                                             unsigned e_max) {
  return frobenius_membership(r, I, e_max, IdealHandle(I.ring()));
}

}  // namespace charp
