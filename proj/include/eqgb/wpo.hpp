#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "eqgb/monomial.hpp"
#include "eqgb/symmetry.hpp"

namespace eqgb {

class InvalidLabel : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Finite poset on {0, ..., n-1} given by its full comparison table.
class PosetTable {
public:
  /// Throws std::invalid_argument unless `leq` is an n-by-n reflexive,
  /// antisymmetric, transitive relation.
  explicit PosetTable(std::vector<std::vector<bool>> leq);
  static PosetTable chain(std::size_t n);
  static PosetTable antichain(std::size_t n);

  std::size_t size() const { return leq_.size(); }
  bool leq(std::uint32_t a, std::uint32_t b) const { return leq_[a][b]; }
  /// Throws InvalidLabel when label >= size().
  void check(std::uint32_t label) const;
  const std::vector<std::vector<bool>>& table() const { return leq_; }

private:
  std::vector<std::vector<bool>> leq_;
};

/// Finite rooted tree with poset labels. Child order carries no meaning.
struct LabelledTree {
  std::uint32_t label = 0;
  std::vector<LabelledTree> children;

  std::size_t size() const;
  bool operator==(const LabelledTree&) const = default;
};

/// Componentwise order; throws std::invalid_argument on length mismatch.
bool dickson_leq(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// A <= B iff some injection f: A -> B has a <= f(a); decided by maximum
/// bipartite matching.
bool multiset_leq(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  const PosetTable& poset);

/// True when every left vertex can be matched along `edge` to a distinct right
/// vertex (Kuhn's augmenting paths).
bool has_left_saturating_matching(std::size_t left, std::size_t right,
                                  const std::function<bool(std::size_t, std::size_t)>& edge);

/// Greedy Higman embedding: each s[i] goes to the earliest position of t after
/// the previous image that dominates it. Returns the positions (0-based) or
/// nullopt. The greedy positions are pointwise minimal among all embeddings.
template <class T, class Leq>
std::optional<std::vector<std::size_t>> higman_embedding(std::span<const T> s, std::span<const T> t,
                                                         Leq&& leq) {
  std::vector<std::size_t> positions;
  positions.reserve(s.size());
  std::size_t next = 0;
  for (const auto& x : s) {
    while (next < t.size() && !leq(x, t[next])) ++next;
    if (next == t.size()) return std::nullopt;
    positions.push_back(next++);
  }
  return positions;
}

bool higman_leq(std::span<const std::uint32_t> s, std::span<const std::uint32_t> t,
                const PosetTable& poset);
/// Higman order over Z_{>=0}^k with the componentwise (Dickson) order.
bool higman_leq(std::span<const std::vector<std::uint64_t>> s,
                std::span<const std::vector<std::uint64_t>> t);

/// Kruskal's tree order: some vertex v of `big` has label >= the root label of
/// `small`, and the root branches of `small` inject into the branches at v with
/// each branch <= its image. Subtrees are interned up to isomorphism and the
/// recursion is memoized on pairs of isomorphism classes.
bool kruskal_leq(const LabelledTree& small, const LabelledTree& big, const PosetTable& poset);

/// Kruskal's order over many trees at once: trees are interned up to
/// isomorphism and answers are memoized across queries.
class KruskalTable {
public:
  explicit KruskalTable(PosetTable poset) : poset_(std::move(poset)) {}

  /// Id of the isomorphism class of `t`; equal trees get equal ids.
  std::size_t add(const LabelledTree& t);
  bool leq(std::size_t small, std::size_t big);
  std::size_t size() const { return nodes_.size(); }

private:
  struct Node {
    std::uint32_t label;
    std::vector<std::size_t> children;
  };
  static constexpr signed char kUnknown = -1, kNo = 0, kYes = 1;

  bool embeds(std::size_t small, std::size_t big);
  bool embeds_at_root(std::size_t small, std::size_t big);

  PosetTable poset_;
  std::map<std::pair<std::uint32_t, std::vector<std::size_t>>, std::size_t> ids_;
  std::vector<Node> nodes_;
  std::vector<std::vector<signed char>> memo_;  // memo_[big][small]
};

/// Pi-divisibility for Inc(N): a witness pi defined on support(u) with
/// apply(pi, u) | v, or nullopt. Among all witnesses the one with the
/// lexicographically smallest image tuple is returned. Rings whose symbols all
/// have at most one free index use the greedy Higman embedding on the
/// column-word encoding; others use pruned backtracking.
std::optional<IncWitness> pi_divides(const Ring& ring, const Monomial& u, const Monomial& v);

/// The backtracking search on its own, for any ring.
std::optional<IncWitness> pi_divides_backtracking(const Monomial& u, const Monomial& v);
/// The word-encoding search; requires every symbol to have free arity <= 1.
std::optional<IncWitness> pi_divides_word(const Monomial& u, const Monomial& v);

}  // namespace eqgb
