#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "eqgb/engine.hpp"
#include "eqgb/orders.hpp"
#include "eqgb/polynomial.hpp"
#include "eqgb/ring.hpp"

namespace testing {

using namespace eqgb;

inline RingPtr onefactor_ring(Field field = Field::rational()) {
  return std::make_shared<const Ring>(
      std::vector<SymbolSchema>{{"x", {}, 1, IndexConstraint::none},
                                {"y", {}, 2, IndexConstraint::strictly_decreasing}},
      field);
}

/// x_{i,j} with i in [rows], j in N.
inline RingPtr row_ring(std::uint32_t rows, Field field = Field::rational()) {
  return std::make_shared<const Ring>(
      std::vector<SymbolSchema>{{"x", {rows}, 1, IndexConstraint::none}}, field);
}

/// y_{ij}, i, j in N, unconstrained.
inline RingPtr square_ring() {
  return std::make_shared<const Ring>(
      std::vector<SymbolSchema>{{"y", {}, 2, IndexConstraint::none}}, Field::rational());
}

struct Factor {
  std::string symbol;
  std::vector<std::uint32_t> fixed;
  std::vector<std::uint32_t> free;
  std::uint32_t exponent = 1;
};

inline Monomial mono(const Ring& r, std::initializer_list<Factor> fs) {
  std::vector<Monomial::Term> terms;
  for (const auto& f : fs) terms.emplace_back(r.variable(f.symbol, f.fixed, f.free), f.exponent);
  return Monomial::from_terms(std::move(terms));
}

inline Polynomial poly(const Ring& r, std::initializer_list<std::pair<long, Monomial>> ts) {
  std::vector<Term> terms;
  for (const auto& [c, m] : ts) terms.push_back({m, Coefficient::from_integer(r.field(), c)});
  return Polynomial::from_terms(r.field(), std::move(terms));
}

// One-factor shorthands: x_i and y_{ij}.
inline Monomial x(const Ring& r, std::uint32_t i, std::uint32_t e = 1) {
  return mono(r, {{"x", {}, {i}, e}});
}
inline Monomial y(const Ring& r, std::uint32_t i, std::uint32_t j) {
  return mono(r, {{"y", {}, {i, j}}});
}
// Row-ring shorthand x_{i,j}.
inline Monomial xr(const Ring& r, std::uint32_t i, std::uint32_t j, std::uint32_t e = 1) {
  return mono(r, {{"x", {i}, {j}, e}});
}

/// A seven-element generating set of the one-factor basis, one quadric redundant.
inline std::vector<Polynomial> onefactor_listing(const Ring& r) {
  return {
      poly(r, {{1, x(r, 1) * x(r, 2)}, {-1, y(r, 2, 1)}}),
      poly(r, {{1, x(r, 3) * y(r, 2, 1)}, {-1, x(r, 2) * y(r, 3, 1)}}),
      poly(r, {{1, x(r, 3) * y(r, 2, 1)}, {-1, x(r, 1) * y(r, 3, 2)}}),
      poly(r, {{1, x(r, 2) * y(r, 3, 1)}, {-1, x(r, 1) * y(r, 3, 2)}}),
      poly(r, {{1, x(r, 1, 2) * y(r, 3, 2)}, {-1, y(r, 3, 1) * y(r, 2, 1)}}),
      poly(r, {{1, y(r, 4, 3) * y(r, 2, 1)}, {-1, y(r, 4, 1) * y(r, 3, 2)}}),
      poly(r, {{1, y(r, 4, 2) * y(r, 3, 1)}, {-1, y(r, 4, 1) * y(r, 3, 2)}}),
  };
}

inline Polynomial onefactor_generator(const Ring& r) {
  return poly(r, {{1, y(r, 2, 1)}, {-1, x(r, 2) * x(r, 1)}});
}

/// Directed cycle y_{12} y_{23} ... y_{m1}.
inline Monomial cycle(const Ring& r, std::uint32_t m) {
  Monomial c;
  for (std::uint32_t i = 1; i <= m; ++i) c = c * y(r, i, i % m + 1);
  return c;
}

}  // namespace testing
