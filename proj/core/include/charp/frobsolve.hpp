#ifndef CHARP_FROBSOLVE_HPP
#define CHARP_FROBSOLVE_HPP

#include <map>

#include "charp/frobenius.hpp"

namespace charp {

// { r : r^(p^e) in K }, for an arbitrary ideal K, computed as the preimage
// of K under the e-th Frobenius endomorphism by tag-variable elimination.
// Exact but expensive; rejected beyond a small p^e budget.
IdealHandle frobenius_preimage(const IdealHandle& K, unsigned e);

// Solves twisted Frobenius membership conditions
//
//     gamma * r^(p^n) in A^[p^n] + J
//
// for all r at once, returning the ideal of solutions in the ambient ring.
//
// Fast route: when J = (f_1..f_k) is a complete-intersection presentation
// and (f_1..f_k, A-generators) is a regular sequence, the condition is
// equivalent to  gamma * u^s * r^(p^n) in (A + J)^[p^n]  with
// u = (f_1...f_k)^(p-1) and s = (p^n-1)/(p-1), and the solution ideal is
//
//     (A + J) : V_n,   V_0 = (gamma),  V_{j+1} = I_1(u * V_j),
//
// where I_1 is the p-th Frobenius root.  All intermediate objects stay
// small; no p^n-scale polynomial is ever formed.
//
// The regular-sequence hypothesis is the caller's assertion (it holds for
// validated parameter frames); without it the solver falls back to the
// preimage route.
class FrobeniusSolver {
 public:
  FrobeniusSolver(IdealHandle J, Poly gamma, bool frames_regular);

  bool fast() const { return fast_; }

  // Multiplier chain level V_n (fast route only; for tests and reports).
  const IdealHandle& multiplier_level(unsigned n);

  // Solution ideal of gamma * r^(p^n) in A^[p^n] + J.
  IdealHandle solutions(const IdealHandle& A, unsigned n);

  // Single query; uses the solution ideal on the fast route and a direct
  // normal-form test otherwise.
  bool contains(const IdealHandle& A, unsigned n, const Poly& r);

 private:
  IdealHandle J_;
  Poly gamma_;
  Poly u_;  // (prod J-gens)^(p-1); 1 when J = (0)
  bool fast_ = false;
  std::vector<IdealHandle> vchain_;
  std::map<std::pair<const void*, unsigned>, IdealHandle> cache_;
};

// True when the generator list of J presents a complete intersection:
// codim(J) == number of generators.  The zero ideal qualifies.
bool complete_intersection_presentation(const IdealHandle& J);

}  // namespace charp

#endif
