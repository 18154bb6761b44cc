#include "eqgb/random.hpp"

#include <algorithm>

namespace eqgb {

Variable Sampler::variable(const Ring& ring, std::uint32_t max_index) {
  return variable_of(ring, static_cast<std::uint16_t>(below(ring.symbols().size())), max_index);
}

Variable Sampler::variable_of(const Ring& ring, std::uint16_t symbol, std::uint32_t max_index) {
  const auto& s = ring.symbol(symbol);
  std::vector<std::uint32_t> fixed, free;
  for (auto bound : s.fixed_bounds) fixed.push_back(static_cast<std::uint32_t>(1 + below(bound)));
  const bool distinct = s.constraint != IndexConstraint::none;
  if (distinct && max_index < s.free_arity)
    throw std::invalid_argument("max_index too small for symbol '" + s.name + "'");
  while (free.size() < s.free_arity) {
    auto j = static_cast<std::uint32_t>(1 + below(max_index));
    if (distinct && std::find(free.begin(), free.end(), j) != free.end()) continue;
    free.push_back(j);
  }
  if (s.constraint == IndexConstraint::strictly_decreasing)
    std::sort(free.begin(), free.end(), std::greater<>());
  auto v = Variable::make(symbol, fixed, free);
  ring.validate(v);
  return v;
}

Monomial Sampler::monomial(const Ring& ring, std::uint32_t max_index, std::size_t max_factors) {
  std::vector<Monomial::Term> terms;
  const auto n = below(max_factors + 1);
  for (std::uint64_t i = 0; i < n; ++i)
    terms.emplace_back(variable(ring, max_index), static_cast<std::uint32_t>(1 + below(2)));
  return Monomial::from_terms(std::move(terms));
}

IncWitness Sampler::witness(std::span<const std::uint32_t> domain, std::uint32_t max_offset) {
  std::vector<std::uint32_t> offsets(domain.size());
  for (auto& d : offsets) d = static_cast<std::uint32_t>(below(max_offset + 1));
  std::sort(offsets.begin(), offsets.end());
  std::vector<std::uint32_t> targets(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) targets[i] = domain[i] + offsets[i];
  return IncWitness::from_images(domain, targets);
}

}  // namespace eqgb
