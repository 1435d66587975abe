#ifndef CHARP_ERROR_HPP
#define CHARP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace charp {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing elements of distinct rings.
struct RingMismatch : Error {
  explicit RingMismatch(const std::string& msg) : Error(msg) {}
};

// Exponent or characteristic arithmetic left the supported range.
// Never silently wrapped.
struct OverflowError : Error {
  explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// Rejected input text; `pos` is a 0-based offset into the input.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), pos(pos) {}
  std::size_t pos;
};

// A precondition on mathematical input failed (unit ideal where a proper
// one is required, zero divisor where a nonzerodivisor is needed, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A computation exceeded its configured search budget in a way that makes
// the requested answer unavailable (as opposed to merely truncated).
struct BudgetError : Error {
  explicit BudgetError(const std::string& msg) : Error(msg) {}
};

}  // namespace charp

#endif
