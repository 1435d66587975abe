#ifndef CHARP_PRIME_HPP
#define CHARP_PRIME_HPP

#include <cstdint>

#include "charp/error.hpp"

namespace charp {

// The prime characteristic p.  Coefficients are least non-negative
// residues stored in 64 bits; products of two residues fit because
// p <= 2^31 - 1.
class PrimeChar {
 public:
  explicit PrimeChar(std::uint64_t p) : p_(p) {
    if (p < 2 || p > 0x7fffffffull || !is_prime(p))
      throw DomainError("characteristic must be a prime in [2, 2^31-1], got " +
                        std::to_string(p));
  }

  std::uint64_t value() const { return p_; }

  friend bool operator==(const PrimeChar& a, const PrimeChar& b) {
    return a.p_ == b.p_;
  }

  // Deterministic trial division; fine for p < 2^31.
  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint64_t p_;
};

// Arithmetic on least non-negative residues mod p.
inline std::uint64_t fp_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t fp_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t fp_neg(std::uint64_t a, std::uint64_t p) {
  return a == 0 ? 0 : p - a;
}

inline std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}

inline std::uint64_t fp_pow(std::uint64_t a, std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (n) {
    if (n & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    n >>= 1;
  }
  return r;
}

inline std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("inverse of zero mod " + std::to_string(p));
  return fp_pow(a, p - 2, p);
}

}  // namespace charp

#endif
