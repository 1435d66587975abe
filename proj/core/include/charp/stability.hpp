#ifndef CHARP_STABILITY_HPP
#define CHARP_STABILITY_HPP

#include <map>
#include <string>

#include "charp/cech.hpp"

namespace charp {

// Descending chain N_0(t) >= N_1(t) >= ... of numerator ideals at level t:
// N_i(t) is the set of r with  c^(p^m0) r^(p^(m0+i))  in the level-t frame
// power plus J, which decides membership of [r/a^t] in the i-th step of
// the chain on the x-torsion-free quotient, m0 being the torsion-killing
// exponent.  The Cohen-Macaulay assertion is required.
std::vector<IdealHandle> n_chain_level(const Poly& c, std::uint64_t t,
                                       const ParameterSystem& frame,
                                       const QuotientCtx& ctx, unsigned m0,
                                       unsigned i_max);

struct StabilityChain {
  Poly c;
  unsigned m0_used = 0;
  std::uint64_t t_max = 0;
  unsigned i_max = 0;
  std::map<std::uint64_t, std::vector<IdealHandle>> per_level;
  bool stationary = false;   // every level became stationary within i_max
  unsigned v0_empirical = 0; // valid when stationary
  bool stabilized = false;   // v0 unchanged when t_max was raised by 1
};

// v0 = least i with N_i(t) = N_{i+1}(t) = N_{i+2}(t) at every computed
// level; the extra step exercises the stationarity once equality occurs.
StabilityChain stability_index(const Poly& c, const ParameterSystem& frame,
                               const QuotientCtx& ctx, std::uint64_t t_max,
                               unsigned i_max, unsigned m0);

// Hard structural checks on a computed chain; any violation indicates an
// engine bug (or a torsion-killing exponent that was estimated too low).
struct Hs5Report {
  bool pass = true;
  std::vector<std::string> violations;
};

Hs5Report verify_hs5_properties(const StabilityChain& chain,
                                const QuotientCtx& ctx);

// Single-class check: if c^(p^m0) x^(n1) h = 0 for the one given n1, then
// c^(p^m0) x^n h = 0 for every n in [m0, e_max].
enum class Hs7Outcome { pass, fail, vacuous };

struct Hs7Report {
  Hs7Outcome outcome;
  std::optional<unsigned> violated_n;
};

Hs7Report verify_cor_hs7(const Poly& c, const CechClass& h, unsigned m0,
                         unsigned v0, unsigned n1, unsigned e_max);

}  // namespace charp

#endif
