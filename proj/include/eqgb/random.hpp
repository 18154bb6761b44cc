#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "eqgb/monomial.hpp"
#include "eqgb/polynomial.hpp"
#include "eqgb/symmetry.hpp"

namespace eqgb {

/// Seeded samplers shared by the property checks. Draws use
/// std::mt19937_64 with modulo reduction so sequences are identical across
/// standard libraries.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n ? rng_() % n : 0; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// A valid variable of a random symbol with free indices in [1, max_index].
  Variable variable(const Ring& ring, std::uint32_t max_index);
  Variable variable_of(const Ring& ring, std::uint16_t symbol, std::uint32_t max_index);
  /// Up to `max_factors` variable factors (exponents 1..2); may be 1.
  Monomial monomial(const Ring& ring, std::uint32_t max_index, std::size_t max_factors);
  /// Random element of Inc(N) restricted to `domain`, with offsets at most
  /// `max_offset`.
  IncWitness witness(std::span<const std::uint32_t> domain, std::uint32_t max_offset);

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace eqgb
