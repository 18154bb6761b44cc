#include "eqgb/polynomial.hpp"

#include <algorithm>

namespace eqgb {

namespace {

bool term_less(const Term& a, const Term& b) { return a.monomial < b.monomial; }

// Merge-adds two sorted term lists with sign on the second operand.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial < b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial < a[i].monomial) {
      out.push_back(negate_b ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
      ++j;
    } else {
      auto c = negate_b ? a[i].coefficient - b[j].coefficient : a[i].coefficient + b[j].coefficient;
      if (!c.is_zero()) out.push_back({a[i].monomial, std::move(c)});
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::from_terms(Field field, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.coefficient.field() != field)
      throw DomainMismatch("term coefficient over " + t.coefficient.field().to_string() +
                           " in a polynomial over " + field.to_string());
  std::sort(terms.begin(), terms.end(), term_less);
  Polynomial p(field);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
      p.terms_.back().coefficient = p.terms_.back().coefficient + t.coefficient;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coefficient.is_zero(); });
  return p;
}

Polynomial Polynomial::constant(Field field, const Coefficient& c) {
  return monomial(field, Monomial(), c);
}

Polynomial Polynomial::monomial(Field field, const Monomial& m, const Coefficient& c) {
  return from_terms(field, {Term{m, c}});
}

std::vector<std::uint32_t> Polynomial::support() const {
  std::vector<std::uint32_t> s;
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.monomial.terms())
      for (auto j : v.free()) s.push_back(j);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::uint32_t Polynomial::max_index() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.monomial.max_index());
  return m;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

std::vector<std::uint16_t> Polynomial::symbols() const {
  std::vector<std::uint16_t> s;
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.monomial.terms()) s.push_back(v.symbol);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.monomial < x; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return Coefficient::zero(field_);
}

void Polynomial::check_field(const Polynomial& o) const {
  if (field_ != o.field_)
    throw DomainMismatch("polynomials over " + field_.to_string() + " and " +
                         o.field_.to_string());
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_field(o);
  Polynomial p(field_);
  p.terms_ = merge_terms(terms_, o.terms_, false);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_field(o);
  Polynomial p(field_);
  p.terms_ = merge_terms(terms_, o.terms_, true);
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_field(o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      prod.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
  return from_terms(field_, std::move(prod));
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial poly_scale(const Polynomial& f, const Coefficient& c) {
  if (c.field() != f.field())
    throw DomainMismatch("scaling a polynomial over " + f.field().to_string() + " by an element of " +
                         c.field().to_string());
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  for (auto& t : terms) t.coefficient = t.coefficient * c;
  return Polynomial::from_terms(f.field(), std::move(terms));
}

Polynomial poly_mul_monomial(const Polynomial& f, const Monomial& m) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.monomial * m, t.coefficient});
  return Polynomial::from_terms(f.field(), std::move(terms));
}

std::string to_debug_string(const Polynomial& f, const Ring& ring) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coefficient.to_string() + ")*" + t.monomial.to_string(ring);
  }
  return out;
}

}  // namespace eqgb
