#ifndef CHARP_MONOMIAL_HPP
#define CHARP_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "charp/error.hpp"

namespace charp {

// Exponent vector of fixed length (the ring's variable count).
// Exponents are 32-bit non-negative integers; all arithmetic is checked,
// since Frobenius powers make exponents grow like p^e.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& exps() const { return e_; }

  bool is_one() const {
    for (auto x : e_)
      if (x) return false;
    return true;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (auto x : e_) d += x;
    return d;
  }

  static std::uint32_t checked_exp(std::uint64_t v) {
    if (v > 0x7fffffffull)
      throw OverflowError("monomial exponent " + std::to_string(v) +
                          " exceeds 2^31-1");
    return static_cast<std::uint32_t>(v);
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r.e_[i] = checked_exp(std::uint64_t(e_[i]) + o.e_[i]);
    return r;
  }

  // this^k, checked.
  Monomial pow(std::uint64_t k) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r.e_[i] = checked_exp(std::uint64_t(e_[i]) * k);
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // o / this, assuming divisibility.
  Monomial quotient_into(const Monomial& o) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = o.e_[i] - e_[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
    return r;
  }

  bool coprime_with(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }

 private:
  std::vector<std::uint32_t> e_;
};

}  // namespace charp

#endif
