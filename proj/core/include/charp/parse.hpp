#ifndef CHARP_PARSE_HPP
#define CHARP_PARSE_HPP

#include <string>
#include <vector>

#include "charp/poly.hpp"

namespace charp {

// Grammar (ASCII, whitespace insignificant):
//   expr   := term { ('+'|'-') term }
//   term   := factor { '*' factor }
//   factor := '-' factor | atom [ '^' integer ]
//   atom   := integer | variable | '(' expr ')'
// '^' binds tighter than '*' binds tighter than '+'/'-'.
Poly parse_poly(const std::string& text, const RingPtr& ring);

// Comma-separated list of polynomials.
std::vector<Poly> parse_poly_list(const std::string& text, const RingPtr& ring);

// Canonical printing: parse(to_string(f)) == f.
std::string to_string(const Poly& f);
std::string to_string(const Monomial& m, const PolyRingSpec& ring);

}  // namespace charp

#endif
