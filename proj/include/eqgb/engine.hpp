#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqgb/orders.hpp"
#include "eqgb/polynomial.hpp"
#include "eqgb/ring.hpp"
#include "eqgb/symmetry.hpp"

namespace eqgb {

/// Ordered list of monic, nonzero polynomials together with the ring and
/// order they live in.
class Basis {
public:
  Basis(RingPtr ring, OrderSpec order) : ring_(std::move(ring)), order_(std::move(order)) {}
  /// Normalizes every element to be monic; throws std::invalid_argument on a
  /// zero element or a field mismatch.
  Basis(RingPtr ring, OrderSpec order, std::vector<Polynomial> elements);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const OrderSpec& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const Polynomial& operator[](std::size_t i) const { return elements_[i]; }
  const Monomial& leading(std::size_t i) const { return leading_[i]; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  void push_back(const Polynomial& f);

private:
  RingPtr ring_;
  OrderSpec order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leading_;
};

struct EngineConfig {
  std::optional<std::size_t> max_steps;   // pairs processed
  std::optional<std::size_t> max_width;   // skip S-polynomials on more than this many indices
  std::optional<std::size_t> max_degree;  // discard remainders above this total degree
  bool use_product_criterion = true;
  std::size_t threads = 1;  // concurrent reduction of the S-polynomials of one pair

  /// Throws std::invalid_argument if a present bound is zero.
  void validate() const;
  bool operator==(const EngineConfig&) const = default;
};

/// One division step: coefficient * multiplier * apply(witness, basis[index]).
struct ReductionStep {
  IncWitness witness;
  std::size_t basis_index = 0;
  Monomial multiplier;
  Coefficient coefficient;
};

struct Reduction {
  Polynomial remainder;
  std::vector<ReductionStep> certificate;
};

/// Division with remainder modulo the Inc(N)-orbits of B. Always top-reduces
/// the largest reducible term with the first basis element (list order) whose
/// leading monomial Pi-divides it, using the first witness pi_divides finds,
/// extended minimally to the element's support. Throws std::invalid_argument
/// when f's field differs from the basis ring's.
Reduction reduce(const Polynomial& f, const Basis& basis);

/// Sum of the certificate terms plus the remainder; equals the reduced input.
Polynomial reconstruct(const Reduction& r, const Basis& basis);

/// (lcm/lm f)/lc(f) * f - (lcm/lm g)/lc(g) * g. Throws ZeroPolynomial on a zero
/// input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const OrderSpec& order);

enum class GBStatus { complete, budget_exhausted };
std::string to_string(GBStatus s);

struct GBStats {
  std::size_t pairs_processed = 0;
  std::size_t spolys_formed = 0;
  std::size_t product_criterion_skips = 0;
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0;
  std::size_t max_width = 0;
  bool operator==(const GBStats&) const = default;
};

struct GBResult {
  GBStatus status = GBStatus::complete;
  Basis basis;
  GBStats stats;
};

/// Equivariant Buchberger algorithm over Inc(N). Pairs, self-pairs included,
/// are processed in order of (width of the canonicalized lcm of the leading
/// monomials, its degree, insertion sequence). For each pair the orbit-pair
/// decomposition supplies the S-polynomials; these are reduced against the
/// basis as it stood when the pair was taken (optionally in parallel), then
/// merged in decomposition order, each re-reduced against the grown basis.
/// The returned basis is the raw basis; see interreduce.
GBResult equivariant_buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators,
                                const OrderSpec& order, const EngineConfig& config = {});

/// Drops or replaces elements whose leading monomial is Pi-divisible by
/// another's, tail-reduces the survivors, and sorts canonically.
Basis interreduce(const Basis& basis);

/// Elements involving only `kept` symbols. Throws std::invalid_argument unless
/// the basis order eliminates every other symbol.
Basis extract_elimination(const Basis& basis, std::span<const std::uint16_t> kept);

/// Sorts by (width, leading monomial in the basis order, term count), with
/// the ordered term list as the final tie-break.
void sort_canonically(std::vector<Polynomial>& elements, const OrderSpec& order);

struct CriterionAudit {
  bool holds = true;
  std::size_t spolys_checked = 0;
  std::string failure;  // first offending S-polynomial when !holds
};

/// Independent re-check of the equivariant Buchberger criterion: every
/// decomposition S-polynomial of every pair, self-pairs included, must reduce
/// to zero. No product criterion shortcut.
CriterionAudit audit_criterion(const Basis& basis);

}  // namespace eqgb
