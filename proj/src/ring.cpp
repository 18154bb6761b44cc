#include "eqgb/ring.hpp"

#include <algorithm>
#include <set>

namespace eqgb {

std::string to_string(IndexConstraint c) {
  switch (c) {
    case IndexConstraint::none: return "none";
    case IndexConstraint::strictly_decreasing: return "strictly-decreasing";
    case IndexConstraint::pairwise_distinct: return "pairwise-distinct";
  }
  return "none";
}

std::optional<IndexConstraint> parse_constraint(std::string_view text) {
  if (text == "none") return IndexConstraint::none;
  if (text == "strictly-decreasing") return IndexConstraint::strictly_decreasing;
  if (text == "pairwise-distinct") return IndexConstraint::pairwise_distinct;
  return std::nullopt;
}

Variable Variable::make(std::uint16_t symbol, std::span<const std::uint32_t> fixed,
                        std::span<const std::uint32_t> free) {
  if (fixed.size() + free.size() > kMaxIndices)
    throw InvalidVariable("variable has more than " + std::to_string(kMaxIndices) + " indices");
  Variable v;
  v.symbol = symbol;
  v.fixed_count = static_cast<std::uint8_t>(fixed.size());
  v.free_count = static_cast<std::uint8_t>(free.size());
  std::copy(fixed.begin(), fixed.end(), v.idx.begin());
  std::copy(free.begin(), free.end(), v.idx.begin() + fixed.size());
  return v;
}

Ring::Ring(std::vector<SymbolSchema> symbols, Field field)
    : symbols_(std::move(symbols)), field_(field) {
  if (symbols_.size() > 0xffff) throw std::invalid_argument("too many symbols");
  std::set<std::string> names;
  for (const auto& s : symbols_) {
    if (s.name.empty()) throw std::invalid_argument("symbol with empty name");
    if (!names.insert(s.name).second)
      throw std::invalid_argument("duplicate symbol '" + s.name + "'");
    for (auto b : s.fixed_bounds)
      if (b < 1) throw std::invalid_argument("symbol '" + s.name + "': fixed bound must be >= 1");
    if (s.fixed_bounds.size() + s.free_arity > kMaxIndices)
      throw std::invalid_argument("symbol '" + s.name + "': too many indices");
    if (s.constraint == IndexConstraint::strictly_decreasing && s.free_arity < 2)
      throw std::invalid_argument("symbol '" + s.name +
                                  "': strictly-decreasing needs free arity >= 2");
    if (s.free_arity > 1) word_encodable_ = false;
  }
}

std::optional<std::uint16_t> Ring::symbol_id(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return static_cast<std::uint16_t>(i);
  return std::nullopt;
}

Variable Ring::variable(std::string_view name, std::span<const std::uint32_t> fixed,
                        std::span<const std::uint32_t> free) const {
  auto id = symbol_id(name);
  if (!id) throw InvalidVariable("unknown symbol '" + std::string(name) + "'");
  const auto& s = symbols_[*id];
  if (fixed.size() != s.fixed_bounds.size() || free.size() != s.free_arity)
    throw InvalidVariable("symbol '" + s.name + "' expects " +
                          std::to_string(s.fixed_bounds.size()) + " fixed and " +
                          std::to_string(s.free_arity) + " free indices");
  auto v = Variable::make(*id, fixed, free);
  validate(v);
  return v;
}

bool Ring::satisfies_constraint(const Variable& v) const {
  auto free = v.free();
  switch (symbols_.at(v.symbol).constraint) {
    case IndexConstraint::none: return true;
    case IndexConstraint::strictly_decreasing:
      for (std::size_t i = 1; i < free.size(); ++i)
        if (free[i - 1] <= free[i]) return false;
      return true;
    case IndexConstraint::pairwise_distinct:
      for (std::size_t i = 0; i < free.size(); ++i)
        for (std::size_t j = i + 1; j < free.size(); ++j)
          if (free[i] == free[j]) return false;
      return true;
  }
  return true;
}

void Ring::validate(const Variable& v) const {
  if (v.symbol >= symbols_.size()) throw InvalidVariable("symbol id out of range");
  const auto& s = symbols_[v.symbol];
  if (v.fixed_count != s.fixed_bounds.size() || v.free_count != s.free_arity)
    throw InvalidVariable("variable of '" + s.name + "' has wrong index counts");
  auto fixed = v.fixed();
  for (std::size_t i = 0; i < fixed.size(); ++i)
    if (fixed[i] < 1 || fixed[i] > s.fixed_bounds[i])
      throw InvalidVariable(variable_name(v) + ": fixed index " + std::to_string(fixed[i]) +
                            " outside [" + std::to_string(s.fixed_bounds[i]) + "]");
  for (auto j : v.free())
    if (j < 1) throw InvalidVariable(variable_name(v) + ": free indices are 1-based");
  if (!satisfies_constraint(v))
    throw InvalidVariable(variable_name(v) + " violates constraint " + to_string(s.constraint));
}

std::string Ring::variable_name(const Variable& v) const {
  std::string out = v.symbol < symbols_.size() ? symbols_[v.symbol].name : "?";
  const auto count = static_cast<std::size_t>(v.fixed_count + v.free_count);
  if (count == 0) return out;
  bool compact = std::all_of(v.idx.begin(), v.idx.begin() + count, [](auto i) { return i < 10; });
  if (compact) {
    for (std::size_t i = 0; i < count; ++i) out += std::to_string(v.idx[i]);
    return out;
  }
  out += '[';
  for (std::size_t i = 0; i < count; ++i) {
    if (i) out += ',';
    out += std::to_string(v.idx[i]);
  }
  return out + ']';
}

}  // namespace eqgb
