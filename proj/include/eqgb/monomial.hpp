#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqgb/ring.hpp"

namespace eqgb {

/// A monomial: finitely many variables with positive exponents, kept sorted by
/// the structural variable order so equality and hashing are structural.
class Monomial {
public:
  using Term = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(const Variable& v, std::uint32_t exponent = 1);
  /// Sorts, merges repeated variables and drops zero exponents.
  static Monomial from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  bool is_one() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::uint64_t total_degree() const;
  std::uint32_t exponent(const Variable& v) const;

  /// Sorted distinct free indices occurring in the monomial.
  std::vector<std::uint32_t> support() const;
  std::size_t width() const { return support().size(); }
  /// Largest free index, 0 when the support is empty.
  std::uint32_t max_index() const;
  bool uses_only(std::span<const std::uint16_t> symbols) const;

  std::string to_string(const Ring& ring) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  std::size_t hash() const;

private:
  std::vector<Term> terms_;
  friend Monomial mono_mul(const Monomial&, const Monomial&);
  friend Monomial lcm_mono(const Monomial&, const Monomial&);
  friend std::optional<Monomial> mono_quotient(const Monomial&, const Monomial&);
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
inline Monomial operator*(const Monomial& a, const Monomial& b) { return mono_mul(a, b); }
bool mono_divides(const Monomial& a, const Monomial& b);
Monomial lcm_mono(const Monomial& a, const Monomial& b);
/// b / a when a divides b.
std::optional<Monomial> mono_quotient(const Monomial& b, const Monomial& a);
bool mono_coprime(const Monomial& a, const Monomial& b);

}  // namespace eqgb

template <>
struct std::hash<eqgb::Monomial> {
  std::size_t operator()(const eqgb::Monomial& m) const noexcept { return m.hash(); }
};
