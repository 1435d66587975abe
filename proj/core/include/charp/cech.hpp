#ifndef CHARP_CECH_HPP
#define CHARP_CECH_HPP

#include <optional>

#include "charp/quotient.hpp"

namespace charp {

// Element [r / (a_1...a_d)^t] of the top local cohomology module of R at
// the graded maximal ideal, presented via a full system of parameters.
// Classes are not auto-normalized; equality is a decision procedure.
struct CechClass {
  Poly numerator;
  std::uint64_t level = 0;
  ParameterSystem frame;  // must be full
  QuotientCtx ctx;
};

CechClass make_cech_class(Poly numerator, std::uint64_t level,
                          ParameterSystem frame, QuotientCtx ctx);

enum class ZeroState { zero, nonzero_certified, nonzero_up_to_bound };

struct ZeroTest {
  ZeroState state;
  unsigned witness_k = 0;  // least witnessing k for `zero`

  bool is_zero() const { return state == ZeroState::zero; }
};

// [r/a^t] vanishes iff (a_1...a_d)^k r lies in (a_1^{t+k},...,a_d^{t+k})+J
// for some k.  Under the Cohen-Macaulay assertion k = 0 is decisive and a
// definite nonzero verdict is returned; otherwise the search is bounded by
// k_max and may come back inconclusive.
ZeroTest cech_is_zero(const CechClass& h, unsigned k_max = 10);

// x[r/a^t] = [r^p / a^(tp)].
CechClass cech_x_action(const CechClass& h);

CechClass cech_scalar_mul(const Poly& r, const CechClass& h);

// Sum after raising both classes to a common level.
CechClass cech_add(const CechClass& a, const CechClass& b);

// [r/a^t] presented at level t2 >= t.
CechClass cech_raise_level(const CechClass& h, std::uint64_t t2);

bool cech_equal(const CechClass& a, const CechClass& b, unsigned k_max = 10);

// Least j <= e_max with x^j h = 0, if any.
std::optional<unsigned> torsion_order(const CechClass& h, unsigned e_max,
                                      unsigned k_max = 10);

// Numerator ideal of the level-t part of the x-torsion submodule: the
// Frobenius-closure chain of (a_1^t,...,a_d^t) in R, with budget e_max.
// Requires the Cohen-Macaulay assertion.
struct GammaLevel {
  IdealHandle numerator;
  bool truncated = false;
  std::optional<unsigned> stabilized_at;
};

GammaLevel gamma_x_level(std::uint64_t t, const ParameterSystem& frame,
                         const QuotientCtx& ctx, unsigned e_max);

// Empirical lower bound for the least e with x^e killing the x-torsion of
// the top local cohomology module, from levels t <= t_max.
struct HslEstimate {
  unsigned m0_lower = 0;
  std::uint64_t t_max = 0;
  bool stabilized = false;  // value unchanged over the last two t increments
  bool truncated = false;   // some level exhausted its e budget
};

HslEstimate hsl_estimate(const ParameterSystem& frame, const QuotientCtx& ctx,
                         std::uint64_t t_max, unsigned e_max);

}  // namespace charp

#endif
