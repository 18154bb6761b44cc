#pragma once

#include <span>
#include <string>
#include <vector>

#include "eqgb/coefficient.hpp"
#include "eqgb/monomial.hpp"

namespace eqgb {

struct Term {
  Monomial monomial;
  Coefficient coefficient;
  bool operator==(const Term&) const = default;
};

/// Sparse polynomial: a finite map Monomial -> nonzero Coefficient over one
/// field. Terms are stored in structural monomial order; order-dependent
/// queries (leading term) live in orders.hpp.
class Polynomial {
public:
  explicit Polynomial(Field field = Field::rational()) : field_(field) {}
  /// Merges equal monomials and drops zero coefficients. Throws DomainMismatch
  /// if a coefficient is not over `field`.
  static Polynomial from_terms(Field field, std::vector<Term> terms);
  static Polynomial constant(Field field, const Coefficient& c);
  static Polynomial monomial(Field field, const Monomial& m, const Coefficient& c);

  const Field& field() const { return field_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Union of the supports of all terms.
  std::vector<std::uint32_t> support() const;
  std::size_t width() const { return support().size(); }
  std::uint32_t max_index() const;
  std::uint64_t total_degree() const;
  /// Symbols occurring in some term, sorted.
  std::vector<std::uint16_t> symbols() const;

  Coefficient coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;

  bool operator==(const Polynomial& o) const = default;

private:
  void check_field(const Polynomial& o) const;
  Field field_;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(const Polynomial& f, const Coefficient& c);
Polynomial poly_mul_monomial(const Polynomial& f, const Monomial& m);

/// Plain, order-independent rendering (terms in structural order), mostly for
/// diagnostics. Use format_polynomial in orders.hpp for ordered output.
std::string to_debug_string(const Polynomial& f, const Ring& ring);

}  // namespace eqgb
