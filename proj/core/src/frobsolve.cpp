#include "charp/frobsolve.hpp"

#include "charp/groebner.hpp"

namespace charp {

namespace {

constexpr std::uint64_t kPreimageMaxQ = 128;
constexpr std::size_t kPreimageMaxVars = 8;

}  // namespace

IdealHandle frobenius_preimage(const IdealHandle& K, unsigned e) {
  const RingPtr& ring = K.ring();
  if (e == 0) return K;
  FrobeniusExponent fe(ring->characteristic(), e);
  const std::uint64_t q = fe.q();
  const std::size_t n = ring->nvars();
  if (q > kPreimageMaxQ || n > kPreimageMaxVars)
    throw BudgetError("Frobenius preimage beyond budget (q=" +
                      std::to_string(q) + ", vars=" + std::to_string(n) + ")");

  // Variables of the source copy are eliminated; the image copy is tagged.
  std::vector<std::string> vars = ring->var_names();
  for (std::size_t i = 0; i < n; ++i) vars.push_back("#y" + std::to_string(i));
  MonomialOrder ord;
  ord.kind = OrderKind::block;
  ord.head = n;
  ord.tail = ring->order().kind == OrderKind::block ? OrderKind::grevlex
                                                    : ring->order().kind;
  RingPtr ext = std::make_shared<PolyRingSpec>(ring->characteristic(),
                                               std::move(vars), ord);

  std::vector<Poly> gens;
  for (const Poly& g : K.gens()) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m(2 * n);
      for (std::size_t i = 0; i < n; ++i) m[i] = t.mono[i];
      terms.push_back(Term{std::move(m), t.coeff});
    }
    gens.push_back(Poly(ext, std::move(terms)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Monomial xq(2 * n), y(2 * n);
    xq[i] = static_cast<std::uint32_t>(q);
    y[n + i] = 1;
    gens.push_back(Poly(ext, {Term{y, 1}, Term{xq, ring->p() - 1}}));
  }

  std::vector<Poly> out;
  for (const Poly& b : reduced_groebner_basis(ext, std::move(gens))) {
    bool pure = true;
    for (const auto& t : b.terms())
      for (std::size_t i = 0; i < n && pure; ++i)
        if (t.mono[i]) pure = false;
    if (!pure) continue;
    std::vector<Term> terms;
    for (const auto& t : b.terms()) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = t.mono[n + i];
      terms.push_back(Term{std::move(m), t.coeff});
    }
    out.push_back(Poly(ring, std::move(terms)));
  }
  return IdealHandle(ring, std::move(out));
}

bool complete_intersection_presentation(const IdealHandle& J) {
  if (J.is_zero_ideal()) return true;
  if (J.is_unit_ideal()) return false;
  return lt_ideal_dimension(J) == J.ring()->nvars() - J.gens().size();
}

FrobeniusSolver::FrobeniusSolver(IdealHandle J, Poly gamma,
                                 bool frames_regular)
    : J_(std::move(J)), gamma_(std::move(gamma)) {
  const RingPtr& ring = J_.ring();
  if (!same_ring(ring, gamma_.ring()))
    throw RingMismatch("multiplier from a different ring");
  fast_ = frames_regular && complete_intersection_presentation(J_);
  Poly prod = Poly::constant(ring, 1);
  for (const Poly& f : J_.gens()) prod = prod * f;
  u_ = prod.pow(ring->p() - 1);
  vchain_.push_back(IdealHandle(ring, {gamma_}));
}

const IdealHandle& FrobeniusSolver::multiplier_level(unsigned n) {
  const RingPtr& ring = J_.ring();
  FrobeniusExponent one(ring->characteristic(), 1);
  while (vchain_.size() <= n) {
    std::vector<Poly> gens;
    for (const Poly& v : vchain_.back().basis())
      for (Poly& c : root_components(u_ * v, one)) gens.push_back(std::move(c));
    vchain_.push_back(IdealHandle(ring, std::move(gens)));
  }
  return vchain_[n];
}

IdealHandle FrobeniusSolver::solutions(const IdealHandle& A, unsigned n) {
  if (!same_ring(A.ring(), J_.ring()))
    throw RingMismatch("frame ideal from a different ring");
  auto key = std::make_pair(A.identity(), n);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  IdealHandle result;
  if (fast_) {
    result = ideal_colon(ideal_sum(A, J_), multiplier_level(n));
  } else {
    if (gamma_.is_zero()) {
      result = IdealHandle(J_.ring(), {Poly::constant(J_.ring(), 1)});
    } else {
      FrobeniusExponent fe(J_.ring()->characteristic(), n);
      IdealHandle K = ideal_sum(frobenius_power(A, fe), J_);
      result = frobenius_preimage(ideal_colon(K, gamma_), n);
    }
  }
  cache_.emplace(key, result);
  return result;
}

bool FrobeniusSolver::contains(const IdealHandle& A, unsigned n,
                               const Poly& r) {
  if (fast_) return solutions(A, n).contains(r);
  FrobeniusExponent fe(J_.ring()->characteristic(), n);
  IdealHandle K = ideal_sum(frobenius_power(A, fe), J_);
  return K.contains(gamma_ * r.frobenius(n));
}

}  // namespace charp
