#include "eqgb/wpo.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace eqgb {

PosetTable::PosetTable(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  const auto n = leq_.size();
  for (const auto& row : leq_)
    if (row.size() != n) throw std::invalid_argument("poset table is not square");
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw std::invalid_argument("poset table is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a])
        throw std::invalid_argument("poset table is not antisymmetric");
      for (std::size_t c = 0; c < n; ++c)
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c])
          throw std::invalid_argument("poset table is not transitive");
    }
  }
}

PosetTable PosetTable::chain(std::size_t n) {
  std::vector<std::vector<bool>> t(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) t[a][b] = true;
  return PosetTable(std::move(t));
}

PosetTable PosetTable::antichain(std::size_t n) {
  std::vector<std::vector<bool>> t(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) t[a][a] = true;
  return PosetTable(std::move(t));
}

void PosetTable::check(std::uint32_t label) const {
  if (label >= size())
    throw InvalidLabel("label " + std::to_string(label) + " outside poset of size " +
                       std::to_string(size()));
}

std::size_t LabelledTree::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

bool dickson_leq(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dickson_leq: lengths " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()) + " differ");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool has_left_saturating_matching(std::size_t left, std::size_t right,
                                  const std::function<bool(std::size_t, std::size_t)>& edge) {
  if (left > right) return false;
  std::vector<std::vector<std::size_t>> adj(left);
  for (std::size_t i = 0; i < left; ++i)
    for (std::size_t j = 0; j < right; ++j)
      if (edge(i, j)) adj[i].push_back(j);
  constexpr auto kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_right(right, kFree);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (auto j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (match_right[j] == kFree || augment(match_right[j])) {
        match_right[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < left; ++i) {
    seen.assign(right, 0);
    if (!augment(i)) return false;
  }
  return true;
}

bool multiset_leq(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  const PosetTable& poset) {
  for (auto x : a) poset.check(x);
  for (auto x : b) poset.check(x);
  return has_left_saturating_matching(a.size(), b.size(), [&](std::size_t i, std::size_t j) {
    return poset.leq(a[i], b[j]);
  });
}

bool higman_leq(std::span<const std::uint32_t> s, std::span<const std::uint32_t> t,
                const PosetTable& poset) {
  for (auto x : s) poset.check(x);
  for (auto x : t) poset.check(x);
  return higman_embedding(s, t, [&](std::uint32_t a, std::uint32_t b) {
           return poset.leq(a, b);
         }).has_value();
}

bool higman_leq(std::span<const std::vector<std::uint64_t>> s,
                std::span<const std::vector<std::uint64_t>> t) {
  return higman_embedding(s, t, [](const auto& a, const auto& b) {
           return dickson_leq(a, b);
         }).has_value();
}

std::size_t KruskalTable::add(const LabelledTree& t) {
  poset_.check(t.label);
  std::vector<std::size_t> kids;
  kids.reserve(t.children.size());
  for (const auto& c : t.children) kids.push_back(add(c));
  std::sort(kids.begin(), kids.end());
  auto key = std::make_pair(t.label, kids);
  auto [it, inserted] = ids_.try_emplace(key, nodes_.size());
  if (inserted) nodes_.push_back({t.label, std::move(kids)});
  return it->second;
}

bool KruskalTable::leq(std::size_t small, std::size_t big) {
  if (small >= nodes_.size() || big >= nodes_.size())
    throw std::out_of_range("KruskalTable::leq: unknown tree id");
  return embeds(small, big);
}

// small embeds somewhere in the subtree rooted at big.
bool KruskalTable::embeds(std::size_t small, std::size_t big) {
  if (memo_.size() <= big) memo_.resize(nodes_.size());
  auto& row = memo_[big];
  if (row.size() <= small) row.resize(nodes_.size(), kUnknown);
  if (row[small] != kUnknown) return row[small] == kYes;
  bool result = embeds_at_root(small, big);
  if (!result)
    for (auto c : nodes_[big].children)
      if (embeds(small, c)) {
        result = true;
        break;
      }
  memo_[big][small] = result ? kYes : kNo;
  return result;
}

bool KruskalTable::embeds_at_root(std::size_t small, std::size_t big) {
  const auto& s = nodes_[small];
  const auto& b = nodes_[big];
  if (!poset_.leq(s.label, b.label)) return false;
  if (s.children.empty()) return true;
  return has_left_saturating_matching(
      s.children.size(), b.children.size(),
      [&](std::size_t i, std::size_t j) { return embeds(s.children[i], b.children[j]); });
}

bool kruskal_leq(const LabelledTree& small, const LabelledTree& big, const PosetTable& poset) {
  KruskalTable table(poset);
  const auto s = table.add(small);
  const auto b = table.add(big);
  return table.leq(s, b);
}

// ---------------------------------------------------------------------------
// Pi-divisibility

namespace {

// Per-index exponent aggregate: for every (variable shape, position) at which
// an index occurs, the summed exponent. A witness can send index s to index t
// only if the aggregate at s is dominated by the aggregate at t.
struct ShapeKey {
  Variable shape;  // free indices zeroed
  std::uint8_t position;
  auto operator<=>(const ShapeKey&) const = default;
  bool operator==(const ShapeKey&) const = default;
};
using Signature = std::vector<std::pair<ShapeKey, std::uint32_t>>;

Variable shape_of(const Variable& v) {
  Variable s = v;
  for (auto& j : s.free_mut()) j = 0;
  return s;
}

std::map<std::uint32_t, Signature> signatures(const Monomial& m) {
  std::map<std::uint32_t, std::map<ShapeKey, std::uint32_t>> acc;
  for (const auto& [v, e] : m.terms()) {
    const Variable shape = shape_of(v);
    auto free = v.free();
    for (std::size_t p = 0; p < free.size(); ++p)
      acc[free[p]][ShapeKey{shape, static_cast<std::uint8_t>(p)}] += e;
  }
  std::map<std::uint32_t, Signature> out;
  for (auto& [j, entries] : acc) out[j] = Signature(entries.begin(), entries.end());
  return out;
}

bool dominated(const Signature& a, const Signature& b) {
  std::size_t j = 0;
  for (const auto& [key, e] : a) {
    while (j < b.size() && b[j].first < key) ++j;
    if (j == b.size() || !(b[j].first == key) || b[j].second < e) return false;
    ++j;
  }
  return true;
}

// Conditions independent of the witness: index-free variables must divide
// outright, and per-shape exponent totals are invariant under the action.
bool invariant_prefilter(const Monomial& u, const Monomial& v) {
  if (u.total_degree() > v.total_degree()) return false;
  std::map<Variable, std::uint64_t> totals;
  for (const auto& [x, e] : v.terms()) totals[shape_of(x)] += e;
  for (const auto& [x, e] : u.terms()) {
    if (x.free_count == 0 && v.exponent(x) < e) return false;
    auto& t = totals[shape_of(x)];
    if (t < e) return false;
    t -= e;
  }
  return true;
}

}  // namespace

std::optional<IncWitness> pi_divides_backtracking(const Monomial& u, const Monomial& v) {
  if (u.is_one()) return IncWitness();
  if (!invariant_prefilter(u, v)) return std::nullopt;
  const auto src = u.support();
  const auto dst = v.support();
  const std::size_t w = src.size(), m = dst.size();
  if (w > m) return std::nullopt;

  auto sig_u = signatures(u);
  auto sig_v = signatures(v);
  std::vector<std::vector<char>> allowed(w, std::vector<char>(m, 0));
  for (std::size_t k = 0; k < w; ++k)
    for (std::size_t l = 0; l < m; ++l) allowed[k][l] = dominated(sig_u[src[k]], sig_v[dst[l]]);

  auto rank_of = [&](std::uint32_t j) {
    return static_cast<std::size_t>(std::lower_bound(src.begin(), src.end(), j) - src.begin());
  };
  // Variables of u with free indices, grouped by the step at which all their
  // indices have been assigned.
  std::vector<std::vector<const Monomial::Term*>> completes(w);
  for (const auto& t : u.terms()) {
    if (t.first.free_count == 0) continue;
    std::size_t last = 0;
    for (auto j : t.first.free()) last = std::max(last, rank_of(j));
    completes[last].push_back(&t);
  }

  std::vector<std::uint32_t> image(w);
  std::vector<std::size_t> chosen(w);
  auto consistent = [&](std::size_t k) {
    for (const auto* t : completes[k]) {
      Variable mapped = t->first;
      for (auto& j : mapped.free_mut()) j = image[rank_of(j)];
      if (v.exponent(mapped) < t->second) return false;
    }
    return true;
  };

  // Iterative depth-first search over increasing, extendable assignments in
  // lexicographic order of the image tuple.
  std::size_t k = 0;
  std::size_t next_l = 0;
  while (true) {
    bool placed = false;
    for (std::size_t l = next_l; l + (w - k) <= m; ++l) {
      if (k == 0 ? dst[l] < src[0] : dst[l] - image[k - 1] < src[k] - src[k - 1]) continue;
      if (!allowed[k][l]) continue;
      image[k] = dst[l];
      chosen[k] = l;
      if (!consistent(k)) continue;
      placed = true;
      break;
    }
    if (placed) {
      if (k + 1 == w) return IncWitness::from_images(src, image);
      next_l = chosen[k] + 1;
      ++k;
      continue;
    }
    if (k == 0) return std::nullopt;
    --k;
    next_l = chosen[k] + 1;
  }
}

std::optional<IncWitness> pi_divides_word(const Monomial& u, const Monomial& v) {
  if (u.is_one()) return IncWitness();
  for (const auto& [x, e] : u.terms())
    if (x.free_count > 1)
      throw std::invalid_argument("word encoding needs free arity <= 1");
  if (!invariant_prefilter(u, v)) return std::nullopt;
  auto sig_u = signatures(u);
  auto sig_v = signatures(v);
  const std::uint32_t len_u = u.max_index(), len_v = v.max_index();
  static const Signature kEmpty;
  auto letter = [](const std::map<std::uint32_t, Signature>& sig, std::uint32_t j) -> const Signature& {
    auto it = sig.find(j);
    return it == sig.end() ? kEmpty : it->second;
  };
  std::vector<std::uint32_t> src, image;
  std::uint32_t next = 1;
  for (std::uint32_t j = 1; j <= len_u; ++j) {
    const auto& a = letter(sig_u, j);
    while (next <= len_v && !dominated(a, letter(sig_v, next))) ++next;
    // Empty letters may land beyond the end of v's word.
    if (next > len_v && !a.empty()) return std::nullopt;
    if (!a.empty()) {
      src.push_back(j);
      image.push_back(next);
    }
    ++next;
  }
  return IncWitness::from_images(src, image);
}

std::optional<IncWitness> pi_divides(const Ring& ring, const Monomial& u, const Monomial& v) {
  if (ring.all_free_arity_at_most_one()) return pi_divides_word(u, v);
  return pi_divides_backtracking(u, v);
}

}  // namespace eqgb
