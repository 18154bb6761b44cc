#pragma once

// Reference implementations by exhaustive search, plus enumerators of small
// instances. Deliberately naive: they share no code with the oracles under test.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "eqgb/wpo.hpp"

namespace brute {

using eqgb::LabelledTree;
using eqgb::PosetTable;
using Seq = std::vector<std::uint32_t>;

inline bool multiset_leq(const Seq& a, const Seq& b, const PosetTable& P) {
  if (a.size() > b.size()) return false;
  // Try every injection a -> b as a prefix of a permutation of b's positions.
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = P.leq(a[i], b[perm[i]]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

template <class T, class Leq>
bool higman_leq(const std::vector<T>& s, const std::vector<T>& t, Leq leq) {
  // Every strictly increasing map [|s|] -> [|t|].
  std::vector<std::size_t> pos;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    if (pos.size() == s.size()) return true;
    for (std::size_t j = from; j < t.size(); ++j) {
      if (!leq(s[pos.size()], t[j])) continue;
      pos.push_back(j);
      if (rec(j + 1)) return true;
      pos.pop_back();
    }
    return false;
  };
  return rec(0);
}

// Flattened tree: parent pointers (root has parent -1) and labels.
struct Flat {
  std::vector<int> parent;
  std::vector<std::uint32_t> label;
  std::vector<int> depth;
};

inline Flat flatten(const LabelledTree& t) {
  Flat f;
  std::function<void(const LabelledTree&, int, int)> rec = [&](const LabelledTree& n, int par, int d) {
    f.parent.push_back(par);
    f.label.push_back(n.label);
    f.depth.push_back(d);
    const int me = static_cast<int>(f.parent.size()) - 1;
    for (const auto& c : n.children) rec(c, me, d + 1);
  };
  rec(t, -1, 0);
  return f;
}

inline int lca(const Flat& f, int a, int b) {
  while (f.depth[a] > f.depth[b]) a = f.parent[a];
  while (f.depth[b] > f.depth[a]) b = f.parent[b];
  while (a != b) a = f.parent[a], b = f.parent[b];
  return a;
}

/// Kruskal's order by its classical definition: an injective map on vertices
/// that raises labels and preserves infima (lowest common ancestors).
inline bool kruskal_leq(const LabelledTree& s, const LabelledTree& t, const PosetTable& P) {
  const Flat a = flatten(s), b = flatten(t);
  const int n = static_cast<int>(a.label.size()), m = static_cast<int>(b.label.size());
  if (n > m) return false;
  std::vector<int> img(n, -1);
  std::vector<bool> used(m, false);
  std::function<bool(int)> rec = [&](int i) {
    if (i == n) {
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (img[lca(a, x, y)] != lca(b, img[x], img[y])) return false;
      return true;
    }
    for (int j = 0; j < m; ++j) {
      if (used[j] || !P.leq(a.label[i], b.label[j])) continue;
      used[j] = true;
      img[i] = j;
      if (rec(i + 1)) return true;
      used[j] = false;
    }
    img[i] = -1;
    return false;
  };
  return rec(0);
}

/// Canonical text of a tree up to isomorphism.
inline std::string canon(const LabelledTree& t) {
  std::vector<std::string> kids;
  for (const auto& c : t.children) kids.push_back(canon(c));
  std::sort(kids.begin(), kids.end());
  std::string out = "(" + std::to_string(t.label);
  for (const auto& k : kids) out += k;
  return out + ")";
}

/// All trees with at most `max_size` vertices and labels in [0, labels), one
/// per isomorphism class. Indexed by size: result[n] holds the trees with n
/// vertices.
inline std::vector<std::vector<LabelledTree>> all_trees(std::size_t max_size, std::uint32_t labels) {
  std::vector<std::vector<LabelledTree>> by_size(max_size + 1);
  // Flat list of all trees so far, in size order; a root's children form a
  // multiset, enumerated as a non-increasing sequence of global indices.
  std::vector<const LabelledTree*> pool;
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<LabelledTree> made;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t max_idx) {
      if (remaining == 0) {
        for (std::uint32_t l = 0; l < labels; ++l) {
          LabelledTree t{l, {}};
          for (auto i : chosen) t.children.push_back(*pool[i]);
          made.push_back(std::move(t));
        }
        return;
      }
      for (std::size_t i = 0; i < max_idx; ++i) {
        if (pool[i]->size() > remaining) continue;
        chosen.push_back(i);
        rec(remaining - pool[i]->size(), i + 1);
        chosen.pop_back();
      }
    };
    rec(n - 1, pool.size());
    by_size[n] = std::move(made);
    for (const auto& t : by_size[n]) pool.push_back(&t);
  }
  return by_size;
}

/// Every partial order on {0, ..., n-1} (labelled, not up to isomorphism).
inline std::vector<PosetTable> all_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> offdiag;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);
  std::vector<PosetTable> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << offdiag.size()); ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    for (std::size_t k = 0; k < offdiag.size(); ++k)
      if (mask >> k & 1) leq[offdiag[k].first][offdiag[k].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (leq[i][j] && leq[j][k] && !leq[i][k]) ok = false;
      }
    if (ok) out.emplace_back(std::move(leq));
  }
  return out;
}

/// One poset per isomorphism class among all_posets(n).
inline std::vector<PosetTable> poset_classes(std::size_t n) {
  std::vector<PosetTable> out;
  std::vector<std::vector<std::vector<bool>>> seen;
  for (auto& p : all_posets(n)) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    bool duplicate = false;
    do {
      std::vector<std::vector<bool>> relabelled(n, std::vector<bool>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) relabelled[perm[i]][perm[j]] = p.leq(i, j);
      if (std::find(seen.begin(), seen.end(), relabelled) != seen.end()) duplicate = true;
    } while (!duplicate && std::next_permutation(perm.begin(), perm.end()));
    if (!duplicate) {
      seen.push_back(p.table());
      out.push_back(p);
    }
  }
  return out;
}

/// All words of length <= max_len over [0, labels).
inline std::vector<Seq> all_words(std::size_t max_len, std::uint32_t labels) {
  std::vector<Seq> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::uint32_t l = 0; l < labels; ++l) {
        Seq w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

/// All multisets of size <= max_size over [0, labels), as sorted sequences.
inline std::vector<Seq> all_multisets(std::size_t max_size, std::uint32_t labels) {
  std::vector<Seq> out;
  for (auto& w : all_words(max_size, labels))
    if (std::is_sorted(w.begin(), w.end())) out.push_back(w);
  return out;
}

}  // namespace brute
