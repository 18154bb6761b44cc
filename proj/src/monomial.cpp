#include "eqgb/monomial.hpp"

#include <algorithm>

namespace eqgb {

Monomial::Monomial(const Variable& v, std::uint32_t exponent) {
  if (exponent) terms_.emplace_back(v, exponent);
}

Monomial Monomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Monomial m;
  for (auto& [v, e] : terms) {
    if (e == 0) continue;
    if (!m.terms_.empty() && m.terms_.back().first == v)
      m.terms_.back().second += e;
    else
      m.terms_.emplace_back(v, e);
  }
  return m;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d += t.second;
  return d;
}

std::uint32_t Monomial::exponent(const Variable& v) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](const Term& t, const Variable& x) { return t.first < x; });
  return it != terms_.end() && it->first == v ? it->second : 0;
}

std::vector<std::uint32_t> Monomial::support() const {
  std::vector<std::uint32_t> s;
  for (const auto& t : terms_)
    for (auto j : t.first.free()) s.push_back(j);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::uint32_t Monomial::max_index() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_)
    for (auto j : t.first.free()) m = std::max(m, j);
  return m;
}

bool Monomial::uses_only(std::span<const std::uint16_t> symbols) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return std::find(symbols.begin(), symbols.end(), t.first.symbol) != symbols.end();
  });
}

std::string Monomial::to_string(const Ring& ring) const {
  if (terms_.empty()) return "1";
  std::string out;
  // Largest variable first, matching how the lex orders read monomials.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += ring.variable_name(it->first);
    if (it->second > 1) out += '^' + std::to_string(it->second);
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  auto mix = [&](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const auto& [v, e] : terms_) {
    mix(v.symbol);
    for (std::size_t i = 0; i < static_cast<std::size_t>(v.fixed_count + v.free_count); ++i)
      mix(v.idx[i]);
    mix(e);
  }
  return h;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      out.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      out.terms_.push_back(*j++);
    } else {
      out.terms_.emplace_back(i->first, i->second + j->second);
      ++i, ++j;
    }
  }
  return out;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  auto ta = a.terms(), tb = b.terms();
  std::size_t j = 0;
  for (const auto& [v, e] : ta) {
    while (j < tb.size() && tb[j].first < v) ++j;
    if (j == tb.size() || !(tb[j].first == v) || tb[j].second < e) return false;
    ++j;
  }
  return true;
}

Monomial lcm_mono(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      out.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      out.terms_.push_back(*j++);
    } else {
      out.terms_.emplace_back(i->first, std::max(i->second, j->second));
      ++i, ++j;
    }
  }
  return out;
}

std::optional<Monomial> mono_quotient(const Monomial& b, const Monomial& a) {
  Monomial out;
  std::size_t i = 0;
  for (const auto& [v, e] : b.terms_) {
    if (i < a.terms_.size() && a.terms_[i].first < v) return std::nullopt;
    if (i < a.terms_.size() && a.terms_[i].first == v) {
      if (a.terms_[i].second > e) return std::nullopt;
      if (a.terms_[i].second < e) out.terms_.emplace_back(v, e - a.terms_[i].second);
      ++i;
    } else {
      out.terms_.emplace_back(v, e);
    }
  }
  if (i != a.terms_.size()) return std::nullopt;
  return out;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  auto ta = a.terms(), tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() && j < tb.size()) {
    if (ta[i].first == tb[j].first) return false;
    if (ta[i].first < tb[j].first)
      ++i;
    else
      ++j;
  }
  return true;
}

}  // namespace eqgb
