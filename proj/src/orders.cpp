#include "eqgb/orders.hpp"

#include <algorithm>

#include "eqgb/random.hpp"
#include "eqgb/symmetry.hpp"

namespace eqgb {

OrderSpec::OrderSpec(const Ring& ring, std::vector<std::uint16_t> precedence, Grading grading)
    : precedence_(std::move(precedence)), grading_(grading) {
  const auto n = ring.symbols().size();
  if (precedence_.size() != n)
    throw std::invalid_argument("order precedence must list all " + std::to_string(n) + " symbols");
  rank_.assign(n, 0xffff);
  for (std::size_t i = 0; i < precedence_.size(); ++i) {
    const auto s = precedence_[i];
    if (s >= n || rank_[s] != 0xffff)
      throw std::invalid_argument("order precedence is not a permutation of the ring's symbols");
    rank_[s] = static_cast<std::uint16_t>(i);
  }
}

OrderSpec OrderSpec::rowlex(const Ring& ring) {
  std::vector<std::uint16_t> prec(ring.symbols().size());
  for (std::size_t i = 0; i < prec.size(); ++i) prec[i] = static_cast<std::uint16_t>(i);
  return OrderSpec(ring, std::move(prec));
}

OrderSpec OrderSpec::elim_onefactor(const Ring& ring) {
  auto x = ring.symbol_id("x");
  auto y = ring.symbol_id("y");
  if (!x || !y || ring.symbols().size() != 2)
    throw std::invalid_argument("elim-onefactor needs exactly the symbols x and y");
  return OrderSpec(ring, {*x, *y});
}

std::optional<OrderSpec> OrderSpec::preset(std::string_view name, const Ring& ring) {
  if (name == "rowlex") return rowlex(ring);
  if (name == "elim-onefactor") return elim_onefactor(ring);
  return std::nullopt;
}

OrderSpec OrderSpec::with_descending_free_indices() const {
  OrderSpec copy = *this;
  copy.free_descending_ = true;
  return copy;
}

bool OrderSpec::eliminates_all_but(std::span<const std::uint16_t> kept) const {
  std::vector<std::uint16_t> k(kept.begin(), kept.end());
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  if (k.size() == precedence_.size()) return true;
  if (grading_ != Grading::none) return false;
  std::vector<std::uint16_t> tail(precedence_.end() - static_cast<std::ptrdiff_t>(k.size()),
                                  precedence_.end());
  std::sort(tail.begin(), tail.end());
  return tail == k;
}

std::strong_ordering compare_variables(const OrderSpec& spec, const Variable& a,
                                       const Variable& b) {
  if (a.symbol != b.symbol) return spec.rank(b.symbol) <=> spec.rank(a.symbol);
  auto fa = a.fixed(), fb = b.fixed();
  if (auto c = std::lexicographical_compare_three_way(fa.begin(), fa.end(), fb.begin(), fb.end());
      c != 0)
    return c;
  auto ra = a.free(), rb = b.free();
  auto c = std::lexicographical_compare_three_way(ra.begin(), ra.end(), rb.begin(), rb.end());
  return spec.descending_free_indices() ? 0 <=> c : c;
}

namespace {

using TermSpan = std::span<const Monomial::Term>;

TermSpan symbol_block(TermSpan terms, std::uint16_t symbol) {
  auto lo = std::partition_point(terms.begin(), terms.end(),
                                 [&](const auto& t) { return t.first.symbol < symbol; });
  auto hi = std::partition_point(lo, terms.end(),
                                 [&](const auto& t) { return t.first.symbol <= symbol; });
  return {lo, hi};
}

// Lex comparison of two single-symbol blocks already sorted ascending in the
// active variable order, reading from the largest variable down.
std::strong_ordering compare_sorted_blocks(const OrderSpec& spec, TermSpan a, TermSpan b) {
  auto i = a.size(), j = b.size();
  while (i > 0 && j > 0) {
    const auto& [va, ea] = a[i - 1];
    const auto& [vb, eb] = b[j - 1];
    if (auto c = compare_variables(spec, va, vb); c != 0) return c;
    if (ea != eb) return ea <=> eb;
    --i, --j;
  }
  if (i > 0) return std::strong_ordering::greater;
  if (j > 0) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::strong_ordering compare_blocks(const OrderSpec& spec, TermSpan a, TermSpan b) {
  if (!spec.descending_free_indices()) return compare_sorted_blocks(spec, a, b);
  auto by_order = [&](const auto& x, const auto& y) {
    return compare_variables(spec, x.first, y.first) < 0;
  };
  std::vector<Monomial::Term> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end(), by_order);
  std::sort(sb.begin(), sb.end(), by_order);
  return compare_sorted_blocks(spec, sa, sb);
}

}  // namespace

std::strong_ordering compare(const OrderSpec& spec, const Monomial& a, const Monomial& b) {
  if (spec.grading() == Grading::total_degree) {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  }
  for (auto symbol : spec.precedence()) {
    auto c = compare_blocks(spec, symbol_block(a.terms(), symbol), symbol_block(b.terms(), symbol));
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

LeadingTerm leading_term(const OrderSpec& spec, const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("leading term of the zero polynomial");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (compare(spec, t.monomial, best->monomial) > 0) best = &t;
  return {best->monomial, best->coefficient};
}

Polynomial make_monic(const OrderSpec& spec, const Polynomial& f) {
  if (f.is_zero()) return f;
  auto lc = leading_term(spec, f).coefficient;
  return lc.is_one() ? f : poly_scale(f, lc.inverse());
}

std::vector<Term> sorted_terms(const OrderSpec& spec, const Polynomial& f) {
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare(spec, a.monomial, b.monomial) > 0;
  });
  return terms;
}

std::string format_monomial(const OrderSpec& spec, const Ring& ring, const Monomial& m) {
  if (m.is_one()) return "1";
  std::vector<Monomial::Term> terms(m.terms().begin(), m.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return compare_variables(spec, a.first, b.first) > 0;
  });
  std::string out;
  for (const auto& [v, e] : terms) {
    if (!out.empty()) out += '*';
    out += ring.variable_name(v);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string format_polynomial(const OrderSpec& spec, const Ring& ring, const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : sorted_terms(spec, f)) {
    Coefficient c = t.coefficient;
    const bool negative = c.is_negative();
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (t.monomial.is_one()) {
      out += c.to_string();
    } else {
      if (!c.is_one()) out += c.to_string() + "*";
      out += format_monomial(spec, ring, t.monomial);
    }
  }
  return out;
}

CompatibilityReport check_compatibility(const Ring& ring, const OrderSpec& spec,
                                        std::size_t samples, std::uint64_t seed) {
  Sampler sampler(seed);
  CompatibilityReport report;
  constexpr std::uint32_t kMaxIndex = 8;
  auto fail = [&](const Monomial& u, const Monomial& v, const IncWitness& pi,
                  const std::string& what) {
    report.passed = false;
    std::string map;
    for (const auto& [s, t] : pi.mapping())
      map += (map.empty() ? "" : ",") + std::to_string(s) + "->" + std::to_string(t);
    report.counterexample = what + ": u=" + u.to_string(ring) + " v=" + v.to_string(ring) +
                            " pi={" + map + "}";
  };
  while (report.samples < samples) {
    Monomial u = sampler.monomial(ring, kMaxIndex, 3);
    Monomial v = sampler.monomial(ring, kMaxIndex, 3);
    auto c = compare(spec, u, v);
    if (c == 0) continue;
    if (c > 0) std::swap(u, v);
    ++report.samples;
    auto support = mono_mul(u, v).support();
    IncWitness pi = sampler.witness(support, 4);
    Monomial pu = apply(pi, u), pv = apply(pi, v);
    if (compare(spec, pu, pv) >= 0) {
      fail(u, v, pi, "u < v but pi(u) >= pi(v)");
      return report;
    }
    if (compare(spec, pu, u) < 0) {
      fail(u, v, pi, "pi(u) < u");
      return report;
    }
  }
  return report;
}

}  // namespace eqgb
