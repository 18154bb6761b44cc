#include "eqgb/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace eqgb {

namespace {

std::string describe(std::span<const IncWitness::Pair> mapping) {
  std::string s = "{";
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(mapping[i].first) + "->" + std::to_string(mapping[i].second);
  }
  return s + "}";
}

template <class Lookup>
Variable remap(const Variable& v, Lookup&& lookup) {
  Variable out = v;
  for (auto& j : out.free_mut()) j = lookup(j);
  return out;
}

template <class Lookup>
Monomial remap(const Monomial& m, Lookup&& lookup) {
  std::vector<Monomial::Term> terms;
  terms.reserve(m.size());
  for (const auto& [v, e] : m.terms()) terms.emplace_back(remap(v, lookup), e);
  // Increasing maps preserve the structural order of variables of one
  // symbol, but not across the merge done here in general; from_terms sorts.
  return Monomial::from_terms(std::move(terms));
}

template <class Lookup>
Polynomial remap(const Polynomial& f, Lookup&& lookup) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({remap(t.monomial, lookup), t.coefficient});
  return Polynomial::from_terms(f.field(), std::move(terms));
}

// Iterates k-subsets of [t] as bitmasks in increasing integer order.
template <class Fn>
void for_each_subset(std::uint32_t t, std::uint32_t k, Fn&& fn) {
  if (k > t) return;
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = t == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
  std::uint64_t mask = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    fn(mask);
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    if (r == 0) return;
    const std::uint64_t next = (((r ^ mask) >> 2) / c) | r;
    if (next > limit || next < mask) return;
    mask = next;
  }
}

IncWitness witness_from_mask(std::uint64_t mask) {
  std::vector<IncWitness::Pair> pairs;
  std::uint32_t source = 1;
  for (std::uint32_t bit = 0; bit < 64; ++bit)
    if (mask >> bit & 1) pairs.emplace_back(source++, bit + 1);
  return IncWitness(std::move(pairs));
}

}  // namespace

bool IncWitness::is_extendable(std::span<const Pair> mapping) {
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    const auto [s, t] = mapping[i];
    if (s < 1 || t < s) return false;
    if (i > 0) {
      const auto [ps, pt] = mapping[i - 1];
      if (s <= ps || t - s < pt - ps) return false;
    }
  }
  return true;
}

IncWitness::IncWitness(std::vector<Pair> mapping) : mapping_(std::move(mapping)) {
  if (!is_extendable(mapping_))
    throw std::invalid_argument("not the restriction of an increasing map: " + describe(mapping_));
}

IncWitness IncWitness::identity(std::span<const std::uint32_t> domain) {
  std::vector<Pair> pairs;
  for (auto s : domain) pairs.emplace_back(s, s);
  return IncWitness(std::move(pairs));
}

IncWitness IncWitness::from_images(std::span<const std::uint32_t> sources,
                                   std::span<const std::uint32_t> targets) {
  if (sources.size() != targets.size())
    throw std::invalid_argument("witness sources and targets differ in length");
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < sources.size(); ++i) pairs.emplace_back(sources[i], targets[i]);
  return IncWitness(std::move(pairs));
}

std::optional<std::uint32_t> IncWitness::image(std::uint32_t source) const {
  auto it = std::lower_bound(mapping_.begin(), mapping_.end(), source,
                             [](const Pair& p, std::uint32_t s) { return p.first < s; });
  if (it != mapping_.end() && it->first == source) return it->second;
  return std::nullopt;
}

std::uint32_t IncWitness::at(std::uint32_t source) const {
  if (auto t = image(source)) return *t;
  throw IncompleteWitness("witness " + describe(mapping_) + " does not cover index " +
                          std::to_string(source));
}

bool IncWitness::covers(std::span<const std::uint32_t> support) const {
  return std::all_of(support.begin(), support.end(),
                     [&](std::uint32_t s) { return image(s).has_value(); });
}

std::vector<std::uint32_t> IncWitness::sources() const {
  std::vector<std::uint32_t> out;
  for (const auto& p : mapping_) out.push_back(p.first);
  return out;
}

std::vector<std::uint32_t> IncWitness::targets() const {
  std::vector<std::uint32_t> out;
  for (const auto& p : mapping_) out.push_back(p.second);
  return out;
}

IncWitness IncWitness::restrict_to(std::span<const std::uint32_t> domain) const {
  std::vector<Pair> pairs;
  for (auto s : domain) pairs.emplace_back(s, at(s));
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return IncWitness(std::move(pairs));
}

IncWitness IncWitness::extend_minimally(std::span<const std::uint32_t> domain) const {
  std::vector<std::uint32_t> all = sources();
  all.insert(all.end(), domain.begin(), domain.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Pair> pairs;
  pairs.reserve(all.size());
  std::uint32_t offset = 0;
  for (auto s : all) {
    if (auto t = image(s)) {
      offset = *t - s;
      pairs.emplace_back(s, *t);
    } else {
      pairs.emplace_back(s, s + offset);
    }
  }
  return IncWitness(std::move(pairs));
}

IncWitness compose(const IncWitness& outer, const IncWitness& inner) {
  std::vector<IncWitness::Pair> pairs;
  for (const auto& [s, t] : inner.mapping()) pairs.emplace_back(s, outer.at(t));
  return IncWitness(std::move(pairs));
}

Variable apply(const IncWitness& pi, const Variable& v) {
  return remap(v, [&](std::uint32_t j) { return pi.at(j); });
}

Monomial apply(const IncWitness& pi, const Monomial& m) {
  return remap(m, [&](std::uint32_t j) { return pi.at(j); });
}

Polynomial apply(const IncWitness& pi, const Polynomial& f) {
  return remap(f, [&](std::uint32_t j) { return pi.at(j); });
}

namespace {

template <class T>
Canonical<T> canonicalize_by_support(const T& value, std::vector<std::uint32_t> support) {
  std::vector<std::uint32_t> initial(support.size());
  for (std::size_t i = 0; i < initial.size(); ++i) initial[i] = static_cast<std::uint32_t>(i + 1);
  auto rank = [&](std::uint32_t j) {
    return static_cast<std::uint32_t>(std::lower_bound(support.begin(), support.end(), j) -
                                      support.begin() + 1);
  };
  return {remap(value, rank), IncWitness::from_images(initial, support)};
}

}  // namespace

Canonical<Monomial> canonicalize(const Monomial& m) {
  return canonicalize_by_support(m, m.support());
}

Canonical<Polynomial> canonicalize(const Polynomial& f) {
  return canonicalize_by_support(f, f.support());
}

std::vector<WitnessPair> orbit_pair_decomposition(std::uint32_t p, std::uint32_t q) {
  if (p + q > 64) throw std::invalid_argument("orbit_pair_decomposition supports p + q <= 64");
  std::vector<WitnessPair> out;
  for (std::uint32_t t = std::max(p, q); t <= p + q; ++t) {
    const std::uint64_t full = t == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
    for_each_subset(t, p, [&](std::uint64_t a) {
      const std::uint64_t missing = full & ~a;
      if (static_cast<std::uint32_t>(std::popcount(missing)) > q) return;
      IncWitness sigma = witness_from_mask(a);
      for_each_subset(t, q, [&](std::uint64_t b) {
        if ((a | b) == full) out.push_back({sigma, witness_from_mask(b), t});
      });
    });
  }
  return out;
}

}  // namespace eqgb
