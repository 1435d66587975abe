#include <doctest.h>

#include <random>

#include "charp/parse.hpp"
#include "support/oracles.hpp"
#include "support/test_rings.hpp"

using namespace charp;
using charp::testing::fermat_ctx;
using charp::testing::monomial_ctx;
using charp::testing::regular_ctx;

namespace {

Poly P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

IdealHandle I(const std::string& gens, const RingPtr& r) {
  return IdealHandle(r, parse_poly_list(gens, r));
}

}  // namespace

TEST_CASE("quotient contexts cache their dimension") {
  CHECK(fermat_ctx(7).dim() == 2);
  CHECK(regular_ctx(2).dim() == 2);
  CHECK(monomial_ctx(7).dim() == 1);

  auto r1 = make_ring(3, {"x"});
  QuotientCtx zerodim(r1, IdealHandle(r1, {P("x", r1)}), RingFlags{});
  CHECK(zerodim.dim() == 0);
  CHECK_THROWS_AS(validate_parameter_ideal({P("x", r1)}, zerodim),
                  DomainError);

  CHECK_THROWS_AS(QuotientCtx(r1, IdealHandle(r1, {P("1", r1)}), RingFlags{}),
                  DomainError);
}

TEST_CASE("membership modulo the defining ideal") {
  QuotientCtx ctx = fermat_ctx(2);
  const RingPtr& r = ctx.ambient();
  CHECK(ctx.member_mod(P("z^3", r), I("x, y", r)));
  CHECK_FALSE(ctx.member_mod(P("z^2", r), I("x, y", r)));
  CHECK(ctx.member_mod(P("z^2", r), I("1", r)));

  // Degree-bounded refutation: no low-degree combination of x, y and the
  // cubic reaches z^2.
  CHECK_FALSE(charp::testing::linear_membership_oracle(
      P("z^2", r), ctx.lift(I("x, y", r)), 2));
}

TEST_CASE("nonzerodivisor detection") {
  QuotientCtx fermat7 = fermat_ctx(7);
  CHECK(is_nonzerodivisor(P("x", fermat7.ambient()), fermat7));
  CHECK(is_nonzerodivisor(P("1", fermat7.ambient()), fermat7));

  QuotientCtx mono = monomial_ctx(5);
  CHECK_FALSE(is_nonzerodivisor(P("x", mono.ambient()), mono));
  CHECK(is_nonzerodivisor(P("x+y", mono.ambient()), mono));

  QuotientCtx fermat2 = fermat_ctx(2);
  CHECK_THROWS_AS(
      is_nonzerodivisor(P("x^3+y^3+z^3", fermat2.ambient()), fermat2),
      DomainError);
}

TEST_CASE("parameter validation") {
  QuotientCtx ctx = fermat_ctx(7);
  const RingPtr& r = ctx.ambient();

  ParameterSystem full =
      validate_parameter_ideal(parse_poly_list("x, y", r), ctx);
  CHECK(full.full);
  CHECK(full.elems.size() == 2);

  ParameterSystem part =
      validate_parameter_ideal(parse_poly_list("x", r), ctx);
  CHECK_FALSE(part.full);

  QuotientCtx reg = regular_ctx(3);
  CHECK_THROWS_AS(
      validate_parameter_ideal(parse_poly_list("x, x^2", reg.ambient()), reg),
      DomainError);

  SUBCASE("permutations stay valid") {
    ParameterSystem swapped =
        validate_parameter_ideal(parse_poly_list("y, x", r), ctx);
    CHECK(swapped.full);
  }

  SUBCASE("a parameter for the non-domain quotient") {
    QuotientCtx mono = monomial_ctx(5);
    ParameterSystem sop = validate_parameter_ideal(
        parse_poly_list("x+y", mono.ambient()), mono);
    CHECK(sop.full);
    CHECK_THROWS_AS(validate_parameter_ideal(
                        parse_poly_list("x", mono.ambient()), mono),
                    DomainError);
  }
}

TEST_CASE("member_mod coincides with ambient membership in the lift") {
  std::mt19937_64 rng(17);
  QuotientCtx ctx = fermat_ctx(3);
  const RingPtr& r = ctx.ambient();
  for (int i = 0; i < 20; ++i) {
    Poly f = charp::testing::random_poly(r, rng, 4, 4);
    IdealHandle ideal = charp::testing::random_ideal(r, rng, 2, 2, 3);
    CHECK(ctx.member_mod(f, ideal) == ctx.lift(ideal).contains(f));
  }
}

TEST_CASE("nonzerodivisors cancel in membership tests") {
  std::mt19937_64 rng(19);
  QuotientCtx ctx = fermat_ctx(7);
  const RingPtr& r = ctx.ambient();
  Poly c = P("x", r);
  REQUIRE(is_nonzerodivisor(c, ctx));
  for (int i = 0; i < 15; ++i) {
    Poly f = charp::testing::random_poly(r, rng, 3, 3);
    IdealHandle ideal = charp::testing::random_ideal(r, rng, 2, 2, 2);
    std::vector<Poly> scaled;
    for (const Poly& g : ideal.gens()) scaled.push_back(c * g);
    IdealHandle cI(r, scaled);
    CHECK(ctx.member_mod(c * f, cI) == ctx.member_mod(f, ideal));
  }
}
