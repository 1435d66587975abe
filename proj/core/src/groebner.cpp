#include "charp/groebner.hpp"

#include <algorithm>
#include <set>

namespace charp {

Poly division_remainder(const Poly& f, std::span<const Poly> divisors) {
  const RingPtr& ring = f.ring();
  const std::uint64_t p = ring->p();
  Poly rest = f;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    bool reduced = false;
    for (const Poly& g : divisors) {
      const Term& gl = g.leading_term();
      if (gl.mono.divides(lt.mono)) {
        Term q{gl.mono.quotient_into(lt.mono),
               fp_mul(lt.coeff, fp_inv(gl.coeff, p), p)};
        rest = rest - g.times_term(q);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(lt);
      Poly head = Poly::monomial(ring, lt.mono, lt.coeff);
      rest = rest - head;
    }
  }
  return Poly(ring, std::move(remainder));
}

Poly exact_quotient(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  const RingPtr& ring = f.ring();
  const std::uint64_t p = ring->p();
  Poly rest = f;
  std::vector<Term> quotient;
  const Term& gl = g.leading_term();
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!gl.mono.divides(lt.mono))
      throw DomainError("inexact polynomial division");
    Term q{gl.mono.quotient_into(lt.mono),
           fp_mul(lt.coeff, fp_inv(gl.coeff, p), p)};
    rest = rest - g.times_term(q);
    quotient.push_back(q);
  }
  return Poly(ring, std::move(quotient));
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t degree;
};

Poly s_polynomial(const Poly& f, const Poly& g, const Monomial& lcm,
                  std::uint64_t p) {
  const Term& fl = f.leading_term();
  const Term& gl = g.leading_term();
  Term tf{fl.mono.quotient_into(lcm), fp_inv(fl.coeff, p)};
  Term tg{gl.mono.quotient_into(lcm), fp_inv(gl.coeff, p)};
  return f.times_term(tf) - g.times_term(tg);
}

}  // namespace

std::vector<Poly> reduced_groebner_basis(const RingPtr& ring,
                                         std::vector<Poly> gens) {
  const std::uint64_t p = ring->p();

  std::vector<Poly> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(std::move(g));
  if (basis.empty()) return {};

  // Processed or discarded index pairs, for the chain criterion.
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto mark = [&](std::size_t a, std::size_t b) {
    done.emplace(std::min(a, b), std::max(a, b));
  };
  auto is_done = [&](std::size_t a, std::size_t b) {
    return done.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  std::vector<Pair> queue;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l =
          Monomial::lcm(basis[i].leading_term().mono, basis[j].leading_term().mono);
      queue.push_back(Pair{i, j, l, l.total_degree()});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    // Normal strategy: minimal lcm degree, ties by the monomial order,
    // then by indices for determinism.
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue.size(); ++k) {
      const Pair &a = queue[k], &b = queue[best];
      if (a.degree != b.degree) {
        if (a.degree < b.degree) best = k;
        continue;
      }
      int c = ring->compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j)))
        best = k;
    }
    Pair pr = queue[best];
    queue.erase(queue.begin() + best);
    mark(pr.i, pr.j);

    const Monomial& li = basis[pr.i].leading_term().mono;
    const Monomial& lj = basis[pr.j].leading_term().mono;
    if (li.coprime_with(lj)) continue;  // Buchberger's first criterion
    bool chained = false;               // Buchberger's second criterion
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (basis[k].leading_term().mono.divides(pr.lcm) && is_done(pr.i, k) &&
          is_done(pr.j, k))
        chained = true;
    }
    if (chained) continue;

    Poly s = s_polynomial(basis[pr.i], basis[pr.j], pr.lcm, p);
    Poly r = division_remainder(s, basis);
    if (!r.is_zero()) {
      basis.push_back(std::move(r));
      push_pairs(basis.size() - 1);
    }
  }

  // Minimalize: drop elements whose leading monomial is divisible by the
  // leading monomial of another kept element.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading_term().mono;
      const Monomial& mj = basis[j].leading_term().mono;
      if (mj.divides(mi) && !(mi == mj)) redundant = true;
      if (mi == mj && j < i) redundant = true;  // keep the first of equals
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Inter-reduce tails and normalize.
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = division_remainder(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return ring->compare(a.leading_term().mono, b.leading_term().mono) < 0;
  });
  return reduced;
}

}  // namespace charp
