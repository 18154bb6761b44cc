#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eqgb/monomial.hpp"
#include "eqgb/polynomial.hpp"

namespace eqgb {

class IncompleteWitness : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The restriction of some strictly increasing map N -> N to a finite set of
/// sources. A finite partial map extends to Inc(N) exactly when sources and
/// targets both increase and the offsets target - source are non-negative and
/// non-decreasing; the constructor enforces that.
class IncWitness {
public:
  using Pair = std::pair<std::uint32_t, std::uint32_t>;

  IncWitness() = default;
  /// Throws std::invalid_argument when the pairs are not the restriction of an
  /// increasing map on N.
  explicit IncWitness(std::vector<Pair> mapping);
  static IncWitness identity(std::span<const std::uint32_t> domain);
  static IncWitness from_images(std::span<const std::uint32_t> sources,
                                std::span<const std::uint32_t> targets);
  /// Validity test without throwing.
  static bool is_extendable(std::span<const Pair> mapping);

  std::span<const Pair> mapping() const { return mapping_; }
  bool empty() const { return mapping_.empty(); }
  std::optional<std::uint32_t> image(std::uint32_t source) const;
  /// Throws IncompleteWitness when `source` is not in the domain.
  std::uint32_t at(std::uint32_t source) const;
  bool covers(std::span<const std::uint32_t> support) const;
  std::vector<std::uint32_t> sources() const;
  std::vector<std::uint32_t> targets() const;

  IncWitness restrict_to(std::span<const std::uint32_t> domain) const;
  /// Extends to domain ∪ sources with the pointwise smallest increasing
  /// extension: an unmapped s is sent to s plus the offset of the nearest
  /// mapped source below it (or to itself when there is none).
  IncWitness extend_minimally(std::span<const std::uint32_t> domain) const;

  auto operator<=>(const IncWitness&) const = default;
  bool operator==(const IncWitness&) const = default;

private:
  std::vector<Pair> mapping_;
};

/// outer ∘ inner on the domain of inner; throws IncompleteWitness when outer
/// does not cover inner's targets.
IncWitness compose(const IncWitness& outer, const IncWitness& inner);

Variable apply(const IncWitness& pi, const Variable& v);
Monomial apply(const IncWitness& pi, const Monomial& m);
Polynomial apply(const IncWitness& pi, const Polynomial& f);

/// Orbit representative: value has support [w] and apply(witness, value) is
/// the input.
template <class T>
struct Canonical {
  T value;
  IncWitness witness;
};

Canonical<Monomial> canonicalize(const Monomial& m);
/// Uses the union of the term supports.
Canonical<Polynomial> canonicalize(const Polynomial& f);

struct WitnessPair {
  IncWitness sigma;  // [p] -> [t]
  IncWitness tau;    // [q] -> [t]
  std::uint32_t t = 0;
  bool operator==(const WitnessPair&) const = default;
};

/// All pairs of increasing maps sigma:[p]->[t], tau:[q]->[t] whose images
/// cover [t], ordered by (t, image of sigma as a bitmask, image of tau as a
/// bitmask); bit j-1 of a mask stands for index j. Supports p + q <= 64.
std::vector<WitnessPair> orbit_pair_decomposition(std::uint32_t p, std::uint32_t q);

}  // namespace eqgb
