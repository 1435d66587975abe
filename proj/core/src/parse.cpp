#include "charp/parse.hpp"

#include <cctype>
#include <map>

namespace charp {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const RingPtr& ring)
      : s_(text), ring_(ring) {
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      vars_[ring->var_names()[i]] = i;
  }

  Poly run() {
    Poly f = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr() {
    Poly f = term();
    for (;;) {
      if (eat('+'))
        f = f + term();
      else if (eat('-'))
        f = f - term();
      else
        return f;
    }
  }

  Poly term() {
    Poly f = factor();
    while (eat('*')) f = f * factor();
    return f;
  }

  Poly factor() {
    if (eat('-')) return -factor();
    Poly base = atom();
    if (eat('^')) {
      skip_ws();
      std::size_t at = pos_;
      std::uint64_t e = integer();
      if (e > 0x7fffffffull) throw ParseError("exponent too large", at);
      return base.pow(e);
    }
    return base;
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Poly f = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(ring_, integer_mod_p());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = pos_;
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_'))
        name += s_[pos_++];
      auto it = vars_.find(name);
      if (it == vars_.end())
        throw ParseError("unknown variable '" + name + "'", at);
      return Poly::variable(ring_, it->second);
    }
    throw ParseError("expected integer, variable or '('", pos_);
  }

  // Plain machine integer, for exponents.
  std::uint64_t integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected integer", pos_);
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 0xffffffffull) throw ParseError("integer too large", pos_);
      ++pos_;
    }
    return v;
  }

  // Digit strings of any length, reduced mod p on the fly.
  std::uint64_t integer_mod_p() {
    const std::uint64_t p = ring_->p();
    skip_ws();
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = (v * 10 + (s_[pos_] - '0')) % p;
      ++pos_;
    }
    return v;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  RingPtr ring_;
  std::map<std::string, std::size_t> vars_;
};

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

std::vector<Poly> parse_poly_list(const std::string& text,
                                  const RingPtr& ring) {
  std::vector<Poly> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string piece = text.substr(start, i - start);
      bool blank = true;
      for (char c : piece)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank) out.push_back(parse_poly(piece, ring));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

std::string to_string(const Monomial& m, const PolyRingSpec& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.var_names()[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  const PolyRingSpec& ring = *f.ring();
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) out += std::to_string(t.coeff) + "*";
      out += to_string(t.mono, ring);
    }
  }
  return out;
}

}  // namespace charp
