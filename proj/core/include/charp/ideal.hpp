#ifndef CHARP_IDEAL_HPP
#define CHARP_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "charp/poly.hpp"

namespace charp {

// Finite generator list plus a lazily computed, cached reduced Groebner
// basis.  Copies share the cache; the cache is filled at most once, under
// a lock, and handles are freely shareable afterwards.
class IdealHandle {
 public:
  IdealHandle() = default;
  explicit IdealHandle(RingPtr ring)
      : state_(new State{std::move(ring), {}, {}, {}}) {}
  IdealHandle(RingPtr ring, std::vector<Poly> gens);

  const RingPtr& ring() const { return state_->ring; }
  const std::vector<Poly>& gens() const { return state_->gens; }

  bool is_zero_ideal() const { return state_->gens.empty(); }

  // Unique reduced Groebner basis: monic, auto-reduced, sorted increasingly
  // by leading monomial.  Empty for the zero ideal.
  const std::vector<Poly>& basis() const;

  // Remainder of f on division by the reduced basis; zero iff f is a member.
  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const;
  bool contains(const IdealHandle& other) const;

  bool is_unit_ideal() const;

  // Stable identity of the shared state; usable as a cache key.
  const void* identity() const { return state_.get(); }

  friend bool operator==(const IdealHandle& a, const IdealHandle& b) {
    return a.basis() == b.basis();
  }

 private:
  struct State {
    RingPtr ring;
    std::vector<Poly> gens;
    mutable std::mutex mu;
    mutable std::optional<std::vector<Poly>> gb;
  };
  std::shared_ptr<State> state_;
};

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_sum(const IdealHandle& a, const std::vector<Poly>& extra);

// (I : f) for f != 0, via intersection with (f) and exact division.
IdealHandle ideal_colon(const IdealHandle& I, const Poly& f);

// (I : K) = intersection of (I : g) over generators g of K.
IdealHandle ideal_colon(const IdealHandle& I, const IdealHandle& K);

// Tag-variable elimination of t*I + (1-t)*K.
IdealHandle ideal_intersect(const IdealHandle& I, const IdealHandle& K);

// Rabinowitsch: f in sqrt(I) iff 1 in I + (1 - t f).
bool radical_membership(const Poly& f, const IdealHandle& I);

// Krull dimension of ring/I, computed from the leading-term ideal as the
// size of a largest variable set containing the support of no generator.
// Throws DomainError on the unit ideal.
std::size_t lt_ideal_dimension(const IdealHandle& I);

}  // namespace charp

#endif
