#include <doctest.h>

#include <random>

#include "charp/parse.hpp"
#include "support/test_rings.hpp"

using namespace charp;
using charp::testing::random_poly;

namespace {

RingPtr ring2() { return make_ring(2, {"x", "y"}); }

Poly P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

}  // namespace

TEST_CASE("prime characteristic validation") {
  CHECK_THROWS_AS(PrimeChar(0), DomainError);
  CHECK_THROWS_AS(PrimeChar(1), DomainError);
  CHECK_THROWS_AS(PrimeChar(4), DomainError);
  CHECK_THROWS_AS(PrimeChar(91), DomainError);  // 7 * 13
  CHECK(PrimeChar(2).value() == 2);
  CHECK(PrimeChar(97).value() == 97);
  CHECK(PrimeChar(2147483647ull).value() == 2147483647ull);
  CHECK_THROWS_AS(PrimeChar(2147483649ull), DomainError);
}

TEST_CASE("addition in small characteristic") {
  auto r2 = ring2();
  CHECK((P("x+y", r2) + P("x+y", r2)).is_zero());
  CHECK(P("x", r2) + Poly::zero(r2) == P("x", r2));

  auto r7 = make_ring(7, {"x", "y"});
  CHECK(P("x+1", r7) + P("y+6", r7) == P("x+y", r7));
}

TEST_CASE("multiplication") {
  auto r2 = ring2();
  CHECK(P("x+y", r2) * P("x+y", r2) == P("x^2+y^2", r2));

  auto r7 = make_ring(7, {"x", "y"});
  CHECK(P("x+y", r7).pow(7) == P("x^7+y^7", r7));

  auto r5 = make_ring(5, {"x"});
  CHECK(P("x+2", r5) * P("x+3", r5) == P("x^2+1", r5));
}

TEST_CASE("frobenius on polynomials") {
  auto r3 = make_ring(3, {"x", "y"});
  CHECK(P("x+y", r3).frobenius(1) == P("x^3+y^3", r3));
  Poly c = P("x^2+2*x*y", r3);
  CHECK(c.frobenius(0) == c);

  auto r7 = make_ring(7, {"x"});
  CHECK(P("3", r7).frobenius(1) == P("3", r7));
}

TEST_CASE("parsing and printing") {
  auto r = make_ring(7, {"x", "y", "z"});
  Poly fermat = P("x^3+y^3+z^3", r);
  CHECK(fermat.terms().size() == 3);
  CHECK(fermat.total_degree() == 3);

  CHECK(P("0", r).is_zero());
  auto r5 = make_ring(5, {"x", "y"});
  CHECK(P("2*x*y^2 + 5", r5) == P("2*x*y^2", r5));

  CHECK(to_string(P("y^2 + x^2 + 2*x*y", r5)) == "x^2 + 2*x*y + y^2");
  CHECK(to_string(Poly::zero(r5)) == "0");

  SUBCASE("operator precedence and unary minus") {
    CHECK(P("-x^2", r5) == P("4*x^2", r5));
    CHECK(P("(x+y)^2", r5) == P("x^2+2*x*y+y^2", r5));
    CHECK(P("2*x+3*x", r5) == P("0", r5));
    CHECK(P("x - - y", r5) == P("x + y", r5));
  }

  SUBCASE("errors carry positions") {
    CHECK_THROWS_AS(P("x + ", r), ParseError);
    CHECK_THROWS_AS(P("w", r), ParseError);
    CHECK_THROWS_AS(P("x ^ y", r), ParseError);
    CHECK_THROWS_AS(P("(x", r), ParseError);
    CHECK_THROWS_AS(P("x 2", r), ParseError);
  }
}

TEST_CASE("parse -> print -> parse is a fixed point") {
  std::mt19937_64 rng(42);
  for (std::uint64_t p : {2ull, 3ull, 7ull}) {
    auto r = make_ring(p, {"x", "y", "z"});
    for (int i = 0; i < 50; ++i) {
      Poly f = random_poly(r, rng, 5, 6);
      std::string s = to_string(f);
      CHECK(parse_poly(s, r) == f);
      CHECK(to_string(parse_poly(s, r)) == s);
    }
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2ull, 3ull, 7ull}) {
    auto r = make_ring(p, {"x", "y"});
    for (int i = 0; i < 40; ++i) {
      Poly a = random_poly(r, rng, 4, 4);
      Poly b = random_poly(r, rng, 4, 4);
      Poly c = random_poly(r, rng, 4, 4);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
    }
  }
}

TEST_CASE("freshman's dream, one hundred cases per characteristic") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2ull, 3ull, 7ull}) {
    auto r = make_ring(p, {"x", "y"});
    for (int i = 0; i < 100; ++i) {
      Poly a = random_poly(r, rng, 3, 4);
      Poly b = random_poly(r, rng, 3, 4);
      CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
    }
  }
}

TEST_CASE("frobenius composes additively in the exponent") {
  std::mt19937_64 rng(13);
  auto r = make_ring(3, {"x", "y"});
  for (int i = 0; i < 25; ++i) {
    Poly a = random_poly(r, rng, 3, 4);
    CHECK(a.frobenius(3) == a.frobenius(1).frobenius(2));
    CHECK(a.frobenius(1) == a.pow(3));
  }
}

TEST_CASE("ring mismatch and overflow are rejected") {
  auto ra = make_ring(2, {"x", "y"});
  auto rb = make_ring(3, {"x", "y"});
  CHECK_THROWS_AS(P("x", ra) + P("x", rb), RingMismatch);
  CHECK_THROWS_AS(P("x", ra) * P("x", rb), RingMismatch);

  Poly x = P("x", ra);
  CHECK_THROWS_AS(x.pow(1u << 31), OverflowError);
  CHECK_THROWS_AS(FrobeniusExponent(ra->characteristic(), 40), OverflowError);
  CHECK(FrobeniusExponent(ra->characteristic(), 5).q() == 32);
}

TEST_CASE("structural ring identity") {
  auto ra = make_ring(2, {"x", "y"});
  auto rb = make_ring(2, {"x", "y"});
  CHECK(same_ring(ra, rb));
  CHECK(P("x+y", ra) == P("x+y", rb));
  CHECK_FALSE(same_ring(ra, make_ring(2, {"x", "y"}, OrderKind::lex)));
}
