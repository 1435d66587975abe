#include "charp/ring.hpp"

#include <set>

namespace charp {

PolyRingSpec::PolyRingSpec(PrimeChar characteristic,
                           std::vector<std::string> var_names,
                           MonomialOrder order)
    : char_(characteristic), vars_(std::move(var_names)), order_(order) {
  if (vars_.empty()) throw DomainError("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw DomainError("empty variable name");
    if (!seen.insert(v).second)
      throw DomainError("duplicate variable name '" + v + "'");
  }
  if (order_.kind == OrderKind::block &&
      (order_.head == 0 || order_.head >= vars_.size()))
    throw DomainError("block order needs 0 < head < nvars");
}

namespace {

// grevlex on the index range [lo, hi).
int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t lo,
                std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // smaller last exponent wins
  }
  return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b, std::size_t lo,
            std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int cmp_kind(OrderKind k, const Monomial& a, const Monomial& b, std::size_t lo,
             std::size_t hi) {
  return k == OrderKind::lex ? cmp_lex(a, b, lo, hi)
                             : cmp_grevlex(a, b, lo, hi);
}

}  // namespace

int PolyRingSpec::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = vars_.size();
  switch (order_.kind) {
    case OrderKind::grevlex:
      return cmp_grevlex(a, b, 0, n);
    case OrderKind::lex:
      return cmp_lex(a, b, 0, n);
    case OrderKind::block: {
      int c = cmp_grevlex(a, b, 0, order_.head);
      if (c) return c;
      return cmp_kind(order_.tail, a, b, order_.head, n);
    }
  }
  return 0;
}

RingPtr make_ring(std::uint64_t p, std::vector<std::string> var_names,
                  OrderKind kind) {
  if (kind == OrderKind::block)
    throw DomainError("block orders are constructed via prepend_tag_vars");
  return std::make_shared<PolyRingSpec>(PrimeChar(p), std::move(var_names),
                                        MonomialOrder{kind});
}

RingPtr prepend_tag_vars(const RingPtr& ring, std::size_t tags) {
  if (tags == 0) throw DomainError("need at least one tag variable");
  OrderKind tail = ring->order().kind;
  if (tail == OrderKind::block) tail = OrderKind::grevlex;
  std::vector<std::string> vars;
  vars.reserve(tags + ring->nvars());
  for (std::size_t i = 0; i < tags; ++i)
    vars.push_back("#t" + std::to_string(i));
  for (const auto& v : ring->var_names()) vars.push_back(v);
  MonomialOrder ord;
  ord.kind = OrderKind::block;
  ord.head = tags;
  ord.tail = tail;
  return std::make_shared<PolyRingSpec>(ring->characteristic(),
                                        std::move(vars), ord);
}

}  // namespace charp
