#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eqgb/engine.hpp"
#include "eqgb/orders.hpp"
#include "eqgb/polynomial.hpp"
#include "eqgb/ring.hpp"

namespace eqgb {

/// The finite polynomial ring of a symbol ring truncated to free indices in
/// [width].
class TruncatedRing {
public:
  TruncatedRing(RingPtr ring, std::uint32_t width);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::uint32_t width() const { return width_; }
  /// Every variable with free indices in [width], in structural order.
  const std::vector<Variable>& variables() const { return variables_; }
  bool contains(const Polynomial& f) const { return f.max_index() <= width_; }

private:
  RingPtr ring_;
  std::uint32_t width_;
  std::vector<Variable> variables_;
};

/// What orbit_expand does with an element using an index above n.
enum class WiderElements {
  reject,  // throw std::invalid_argument
  skip,    // contribute nothing: pi(j) >= j, so no image lies within [n]
};

/// { apply(pi, g) : g in elements, pi in Inc(N) with pi(support g) in [n] },
/// duplicate-free, in element order then lexicographic witness order.
std::vector<Polynomial> orbit_expand(std::span<const Polynomial> elements, std::uint32_t n,
                                     WiderElements wider = WiderElements::reject);
inline std::vector<Polynomial> orbit_expand(const Basis& basis, std::uint32_t n,
                                            WiderElements wider = WiderElements::reject) {
  return orbit_expand(basis.elements(), n, wider);
}

/// Reduced Groebner basis (monic, sorted by descending leading monomial) of the
/// ideal generated by `gens` in the truncated ring, by a textbook Buchberger
/// on dense exponent vectors. Throws std::invalid_argument when a generator
/// leaves the truncation.
std::vector<Polynomial> finite_buchberger(std::span<const Polynomial> gens, const TruncatedRing& ring,
                                          const OrderSpec& order);

/// True when `elements` is already a Groebner basis of the ideal it generates
/// (every S-pair reduces to zero).
bool finite_is_groebner(std::span<const Polynomial> elements, const TruncatedRing& ring,
                        const OrderSpec& order);

/// True iff each list reduces to zero modulo the Groebner basis of the other.
bool same_ideal(std::span<const Polynomial> a, std::span<const Polynomial> b,
                const TruncatedRing& ring, const OrderSpec& order);

/// Orbit representatives of the rank-one-tensor quadrics
/// y_m y_m' - y_{swap(m,m')} y_{swap(m',m)} over multi-indices in [2k]^k, where
/// swap exchanges a nonempty proper subset of coordinates. `ring` must have a
/// symbol named y with k free indices and no constraint.
std::vector<Polynomial> segre_quadrics(const Ring& ring, std::uint32_t k, const OrderSpec& order);

/// Applies y_m -> prod_i x_{i, m_i} into `target`, which must have a symbol
/// named x with one fixed index bounded by k and one free index.
Polynomial segre_substitute(const Polynomial& f, const Ring& source, const Ring& target);

}  // namespace eqgb
