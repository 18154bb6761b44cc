#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqgb/coefficient.hpp"

namespace eqgb {

/// Upper bound on fixed + free indices of one symbol.
inline constexpr std::size_t kMaxIndices = 6;

class InvalidVariable : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class IndexConstraint { none, strictly_decreasing, pairwise_distinct };

std::string to_string(IndexConstraint c);
/// Accepts "none", "strictly-decreasing", "pairwise-distinct".
std::optional<IndexConstraint> parse_constraint(std::string_view text);

/// A family of variables such as x_{ij} (i in [k], j in N) or y_{ij} (i > j).
struct SymbolSchema {
  std::string name;
  std::vector<std::uint32_t> fixed_bounds;  // fixed index t ranges over [fixed_bounds[t]]
  std::uint32_t free_arity = 0;
  IndexConstraint constraint = IndexConstraint::none;

  bool operator==(const SymbolSchema&) const = default;
};

/// One variable: symbol id within its ring, fixed indices, then free (N-) indices.
/// Ordered structurally by (symbol, fixed lex, free lex).
struct Variable {
  std::uint16_t symbol = 0;
  std::uint8_t fixed_count = 0;
  std::uint8_t free_count = 0;
  std::array<std::uint32_t, kMaxIndices> idx{};

  static Variable make(std::uint16_t symbol, std::span<const std::uint32_t> fixed,
                       std::span<const std::uint32_t> free);

  std::span<const std::uint32_t> fixed() const { return {idx.data(), fixed_count}; }
  std::span<const std::uint32_t> free() const { return {idx.data() + fixed_count, free_count}; }
  std::span<std::uint32_t> free_mut() { return {idx.data() + fixed_count, free_count}; }

  auto operator<=>(const Variable&) const = default;
  bool operator==(const Variable&) const = default;
};

/// Symbol schemas plus the coefficient field. Immutable once built.
class Ring {
public:
  /// Throws std::invalid_argument on malformed schemas or duplicate names.
  Ring(std::vector<SymbolSchema> symbols, Field field);

  const std::vector<SymbolSchema>& symbols() const { return symbols_; }
  const SymbolSchema& symbol(std::uint16_t id) const { return symbols_.at(id); }
  const Field& field() const { return field_; }

  std::optional<std::uint16_t> symbol_id(std::string_view name) const;

  /// Builds and validates a variable; throws InvalidVariable.
  Variable variable(std::string_view name, std::span<const std::uint32_t> fixed,
                    std::span<const std::uint32_t> free) const;
  Variable variable(std::string_view name, std::initializer_list<std::uint32_t> fixed,
                    std::initializer_list<std::uint32_t> free) const {
    return variable(name, std::span(fixed.begin(), fixed.size()),
                    std::span(free.begin(), free.size()));
  }

  /// Throws InvalidVariable when v violates its schema's bounds or constraint.
  void validate(const Variable& v) const;
  bool satisfies_constraint(const Variable& v) const;

  /// True when no symbol has more than one free index.
  bool all_free_arity_at_most_one() const { return word_encodable_; }

  std::string variable_name(const Variable& v) const;

  bool operator==(const Ring& o) const { return symbols_ == o.symbols_ && field_ == o.field_; }

private:
  std::vector<SymbolSchema> symbols_;
  Field field_;
  bool word_encodable_ = true;
};

using RingPtr = std::shared_ptr<const Ring>;

}  // namespace eqgb
