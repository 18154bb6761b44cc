#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqgb/polynomial.hpp"
#include "eqgb/ring.hpp"

namespace eqgb {

class ZeroPolynomial : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Grading { none, total_degree };

/// Declarative Inc(N)-compatible monomial order.
///
/// Variables compare by symbol precedence first, then by fixed indices and
/// free indices lexicographically ascending, so each symbol's variables form
/// an ascending sequence of order type omega (per fixed-index row). Monomials
/// compare optionally by total degree, then lexicographically reading
/// exponents from the largest variable downward.
class OrderSpec {
public:
  /// `precedence` lists every symbol id of the ring exactly once, largest
  /// symbol first. Throws std::invalid_argument otherwise.
  OrderSpec(const Ring& ring, std::vector<std::uint16_t> precedence,
            Grading grading = Grading::none);

  /// Lex, symbols ranked in declaration order (first declared is largest).
  static OrderSpec rowlex(const Ring& ring);
  /// Lex with every x above every y; requires symbols named x and y.
  static OrderSpec elim_onefactor(const Ring& ring);
  /// "rowlex" or "elim-onefactor"; nullopt for an unknown name.
  static std::optional<OrderSpec> preset(std::string_view name, const Ring& ring);

  const std::vector<std::uint16_t>& precedence() const { return precedence_; }
  Grading grading() const { return grading_; }
  std::uint16_t rank(std::uint16_t symbol) const { return rank_.at(symbol); }

  /// Reverses free-index comparison within symbols. The resulting order is not
  /// compatible with the Inc(N)-action; it exists to exercise the
  /// compatibility checker.
  OrderSpec with_descending_free_indices() const;
  bool descending_free_indices() const { return free_descending_; }

  /// True when `kept` is exactly a trailing block of the precedence and the
  /// order is ungraded (or keeps everything).
  bool eliminates_all_but(std::span<const std::uint16_t> kept) const;

  bool operator==(const OrderSpec&) const = default;

private:
  std::vector<std::uint16_t> precedence_;
  std::vector<std::uint16_t> rank_;  // symbol id -> position in precedence
  Grading grading_;
  bool free_descending_ = false;
};

std::strong_ordering compare_variables(const OrderSpec& spec, const Variable& a, const Variable& b);
std::strong_ordering compare(const OrderSpec& spec, const Monomial& a, const Monomial& b);

struct LeadingTerm {
  Monomial monomial;
  Coefficient coefficient;
};

/// Throws ZeroPolynomial for f = 0.
LeadingTerm leading_term(const OrderSpec& spec, const Polynomial& f);
inline Monomial leading_monomial(const OrderSpec& spec, const Polynomial& f) {
  return leading_term(spec, f).monomial;
}

/// f divided by its leading coefficient; zero stays zero.
Polynomial make_monic(const OrderSpec& spec, const Polynomial& f);

/// Terms of f, largest first.
std::vector<Term> sorted_terms(const OrderSpec& spec, const Polynomial& f);

/// Factors listed from the largest variable down, e.g. "x1^2*y32".
std::string format_monomial(const OrderSpec& spec, const Ring& ring, const Monomial& m);

/// Human-readable form such as "y43*y21 - y41*y32", terms in descending order.
std::string format_polynomial(const OrderSpec& spec, const Ring& ring, const Polynomial& f);

struct CompatibilityReport {
  bool passed = true;
  std::size_t samples = 0;
  std::string counterexample;  // empty when passed
};

/// Randomized check that u < v implies pi(u) < pi(v) and that pi(u) >= u, for
/// `samples` seeded random triples over indices in [1, 8].
CompatibilityReport check_compatibility(const Ring& ring, const OrderSpec& spec,
                                        std::size_t samples, std::uint64_t seed);

}  // namespace eqgb
