#ifndef CHARP_RING_HPP
#define CHARP_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "charp/monomial.hpp"
#include "charp/prime.hpp"

namespace charp {

enum class OrderKind { grevlex, lex, block };

// Monomial order.  `block` compares the first `head` variables by grevlex
// first, then the rest by `tail`; it is the elimination order used for
// colon, intersection and Rabinowitsch computations, with the tag
// variables placed first.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t head = 0;                   // block only
  OrderKind tail = OrderKind::grevlex;    // block only

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    if (a.kind != b.kind) return false;
    if (a.kind != OrderKind::block) return true;
    return a.head == b.head && a.tail == b.tail;
  }
};

// The ambient ring F_p[x_1..x_n] together with its monomial order.
// Immutable after construction; shared by reference between polynomials.
class PolyRingSpec {
 public:
  PolyRingSpec(PrimeChar characteristic, std::vector<std::string> var_names,
               MonomialOrder order);

  std::uint64_t p() const { return char_.value(); }
  const PrimeChar& characteristic() const { return char_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const MonomialOrder& order() const { return order_; }

  // <0, 0, >0 like strcmp; total and multiplicative.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const PolyRingSpec& a, const PolyRingSpec& b) {
    return a.char_ == b.char_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  PrimeChar char_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRingSpec>;

RingPtr make_ring(std::uint64_t p, std::vector<std::string> var_names,
                  OrderKind kind = OrderKind::grevlex);

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

// Ring with `tags` fresh variables prepended and a block order that
// eliminates them.  Tag names use '#' so they can never collide with
// parsed user variables.
RingPtr prepend_tag_vars(const RingPtr& ring, std::size_t tags);

}  // namespace charp

#endif
