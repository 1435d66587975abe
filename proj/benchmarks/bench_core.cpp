#include <benchmark/benchmark.h>

#include "charp/frobsolve.hpp"
#include "charp/parse.hpp"
#include "charp/stability.hpp"

using namespace charp;

namespace {

QuotientCtx fermat(std::uint64_t p) {
  RingPtr ring = make_ring(p, {"x", "y", "z"});
  IdealHandle j(ring, {parse_poly("x^3+y^3+z^3", ring)});
  return QuotientCtx(ring, j, RingFlags{true, true, true});
}

void BM_ReducedBasisFermatFrame(benchmark::State& state) {
  QuotientCtx ctx = fermat(7);
  const RingPtr& r = ctx.ambient();
  std::uint64_t t = state.range(0);
  for (auto _ : state) {
    IdealHandle ideal(r, {parse_poly("x", r).pow(t), parse_poly("y", r).pow(t),
                          ctx.defining_ideal().gens()[0]});
    benchmark::DoNotOptimize(ideal.basis());
  }
}
BENCHMARK(BM_ReducedBasisFermatFrame)->Arg(2)->Arg(8)->Arg(32);

void BM_NormalForm(benchmark::State& state) {
  QuotientCtx ctx = fermat(7);
  const RingPtr& r = ctx.ambient();
  IdealHandle ideal = ctx.lift(IdealHandle(r, parse_poly_list("x^4, y^4", r)));
  Poly f = parse_poly("(x+y+z)^6", r);
  ideal.basis();
  for (auto _ : state) benchmark::DoNotOptimize(ideal.normal_form(f));
}
BENCHMARK(BM_NormalForm);

void BM_FrobeniusRoot(benchmark::State& state) {
  RingPtr r = make_ring(2, {"x", "y", "z"});
  Poly f = parse_poly("(x^3+y^3+z^3)^5", r);
  IdealHandle ideal(r, {f});
  FrobeniusExponent e(r->characteristic(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_root(ideal, e));
}
BENCHMARK(BM_FrobeniusRoot)->Arg(1)->Arg(2);

void BM_TwistedSolutions(benchmark::State& state) {
  QuotientCtx ctx = fermat(static_cast<std::uint64_t>(state.range(0)));
  const RingPtr& r = ctx.ambient();
  ParameterSystem frame =
      validate_parameter_ideal(parse_poly_list("x, y", r), ctx);
  for (auto _ : state) {
    FrobeniusSolver solver(ctx.defining_ideal(), parse_poly("x", r), true);
    IdealHandle frame_t = frame.power_ideal(r, 2);
    benchmark::DoNotOptimize(solver.solutions(frame_t, 4));
  }
}
BENCHMARK(BM_TwistedSolutions)->Arg(2)->Arg(7);

void BM_StabilityLevel(benchmark::State& state) {
  QuotientCtx ctx = fermat(2);
  const RingPtr& r = ctx.ambient();
  ParameterSystem frame =
      validate_parameter_ideal(parse_poly_list("x, y", r), ctx);
  for (auto _ : state) {
    auto chain = n_chain_level(parse_poly("x", r), 2, frame, ctx, 1, 4);
    benchmark::DoNotOptimize(chain);
  }
}
BENCHMARK(BM_StabilityLevel);

}  // namespace

BENCHMARK_MAIN();
