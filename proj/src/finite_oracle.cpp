#include "eqgb/finite_oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "eqgb/symmetry.hpp"

namespace eqgb {

TruncatedRing::TruncatedRing(RingPtr ring, std::uint32_t width)
    : ring_(std::move(ring)), width_(width) {
  for (std::size_t s = 0; s < ring_->symbols().size(); ++s) {
    const auto& schema = ring_->symbols()[s];
    std::vector<std::uint32_t> fixed(schema.fixed_bounds.size(), 1);
    std::vector<std::uint32_t> free(schema.free_arity, 1);
    // Odometer over fixed indices, then free indices in [width].
    std::function<void(std::size_t)> fill_free = [&](std::size_t pos) {
      if (pos == free.size()) {
        auto v = Variable::make(static_cast<std::uint16_t>(s), fixed, free);
        if (ring_->satisfies_constraint(v)) variables_.push_back(v);
        return;
      }
      for (std::uint32_t j = 1; j <= width_; ++j) {
        free[pos] = j;
        fill_free(pos + 1);
      }
    };
    std::function<void(std::size_t)> fill_fixed = [&](std::size_t pos) {
      if (pos == fixed.size()) {
        fill_free(0);
        return;
      }
      for (std::uint32_t i = 1; i <= schema.fixed_bounds[pos]; ++i) {
        fixed[pos] = i;
        fill_fixed(pos + 1);
      }
    };
    fill_fixed(0);
  }
  std::sort(variables_.begin(), variables_.end());
}

namespace {

using Key = std::vector<std::pair<Monomial, std::string>>;

Key structural_key(const Polynomial& f) {
  Key k;
  for (const auto& t : f.terms()) k.emplace_back(t.monomial, t.coefficient.to_string());
  return k;
}

void enumerate_targets(std::span<const std::uint32_t> src, std::uint32_t n,
                       std::vector<std::uint32_t>& targets,
                       const std::function<void()>& emit) {
  const std::size_t k = targets.size();
  if (k == src.size()) {
    emit();
    return;
  }
  const std::uint32_t lo = k == 0 ? src[0] : targets[k - 1] + (src[k] - src[k - 1]);
  // Room must remain for the later sources.
  const std::uint32_t tail = src.back() - src[k];
  for (std::uint32_t t = lo; t + tail <= n; ++t) {
    targets.push_back(t);
    enumerate_targets(src, n, targets, emit);
    targets.pop_back();
  }
}

}  // namespace

std::vector<Polynomial> orbit_expand(std::span<const Polynomial> elements, std::uint32_t n,
                                     WiderElements wider) {
  std::vector<Polynomial> out;
  std::set<Key> seen;
  for (const auto& g : elements) {
    if (g.max_index() > n && wider == WiderElements::skip) continue;
    if (g.max_index() > n)
      throw std::invalid_argument("orbit_expand: width " + std::to_string(n) +
                                  " is smaller than an element's largest index " +
                                  std::to_string(g.max_index()));
    const auto src = g.support();
    if (src.empty()) {
      if (seen.insert(structural_key(g)).second) out.push_back(g);
      continue;
    }
    std::vector<std::uint32_t> targets;
    enumerate_targets(src, n, targets, [&] {
      Polynomial image = apply(IncWitness::from_images(src, targets), g);
      if (seen.insert(structural_key(image)).second) out.push_back(std::move(image));
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Textbook Buchberger on dense exponent vectors.

namespace {

using Exps = std::vector<std::uint16_t>;

struct DenseTerm {
  Exps exps;
  Coefficient coef;
};

class DenseRing {
public:
  DenseRing(const TruncatedRing& tr, const OrderSpec& order)
      : field_(tr.ring().field()), graded_(order.grading() == Grading::total_degree) {
    if (order.descending_free_indices())
      throw std::invalid_argument("finite oracle needs an Inc(N)-compatible order");
    vars_ = tr.variables();
    const auto& prec = order.precedence();
    std::vector<std::size_t> height(prec.size());
    for (std::size_t i = 0; i < prec.size(); ++i) height[prec[i]] = prec.size() - i;
    // Ascending: lower symbols first, then fixed and free indices lexicographically.
    std::sort(vars_.begin(), vars_.end(), [&](const Variable& a, const Variable& b) {
      if (a.symbol != b.symbol) return height[a.symbol] < height[b.symbol];
      return std::lexicographical_compare(a.idx.begin(), a.idx.begin() + a.fixed_count + a.free_count,
                                          b.idx.begin(), b.idx.begin() + b.fixed_count + b.free_count);
    });
    for (std::size_t i = 0; i < vars_.size(); ++i) position_[vars_[i]] = i;
  }

  std::size_t nvars() const { return vars_.size(); }
  const Field& field() const { return field_; }

  // Negative, zero, positive as a < b, a == b, a > b.
  int cmp(const Exps& a, const Exps& b) const {
    if (graded_) {
      unsigned da = 0, db = 0;
      for (auto e : a) da += e;
      for (auto e : b) db += e;
      if (da != db) return da < db ? -1 : 1;
    }
    for (std::size_t p = a.size(); p-- > 0;)
      if (a[p] != b[p]) return a[p] < b[p] ? -1 : 1;
    return 0;
  }

  std::vector<DenseTerm> to_dense(const Polynomial& f) const {
    std::vector<DenseTerm> out;
    for (const auto& t : f.terms()) {
      Exps e(vars_.size(), 0);
      for (const auto& [v, x] : t.monomial.terms()) {
        auto it = position_.find(v);
        if (it == position_.end())
          throw std::invalid_argument("finite oracle: variable outside the truncated ring");
        e[it->second] = static_cast<std::uint16_t>(x);
      }
      out.push_back({std::move(e), t.coefficient});
    }
    sort_desc(out);
    return out;
  }

  Polynomial to_poly(const std::vector<DenseTerm>& f) const {
    std::vector<Term> terms;
    for (const auto& t : f) {
      std::vector<Monomial::Term> mt;
      for (std::size_t p = 0; p < t.exps.size(); ++p)
        if (t.exps[p]) mt.emplace_back(vars_[p], t.exps[p]);
      terms.push_back({Monomial::from_terms(std::move(mt)), t.coef});
    }
    return Polynomial::from_terms(field_, std::move(terms));
  }

  void sort_desc(std::vector<DenseTerm>& f) const {
    std::sort(f.begin(), f.end(),
              [&](const DenseTerm& a, const DenseTerm& b) { return cmp(a.exps, b.exps) > 0; });
  }

private:
  std::vector<Variable> vars_;
  std::map<Variable, std::size_t> position_;
  Field field_;
  bool graded_;
};

using DensePoly = std::vector<DenseTerm>;  // descending, nonzero coefficients

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

class FiniteGB {
public:
  explicit FiniteGB(const DenseRing& ring) : ring_(ring) {}

  DensePoly monic(DensePoly f) const {
    if (f.empty()) return f;
    Coefficient inv = f.front().coef.inverse();
    for (auto& t : f) t.coef = t.coef * inv;
    return f;
  }

  // Full reduction of f modulo g_list, skipping index `skip`.
  DensePoly reduce(const DensePoly& f, const std::vector<DensePoly>& g_list,
                   std::size_t skip = static_cast<std::size_t>(-1)) const {
    auto desc = [&](const Exps& a, const Exps& b) { return ring_.cmp(a, b) > 0; };
    std::map<Exps, Coefficient, decltype(desc)> work(desc);
    for (const auto& t : f) work.emplace(t.exps, t.coef);
    DensePoly rem;
    while (!work.empty()) {
      auto top = work.begin();
      const DensePoly* reducer = nullptr;
      for (std::size_t k = 0; k < g_list.size(); ++k)
        if (k != skip && !g_list[k].empty() && divides(g_list[k].front().exps, top->first)) {
          reducer = &g_list[k];
          break;
        }
      if (!reducer) {
        rem.push_back({top->first, top->second});
        work.erase(top);
        continue;
      }
      Exps shift = top->first;
      for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= reducer->front().exps[i];
      Coefficient c = top->second / reducer->front().coef;
      for (const auto& t : *reducer) {
        Exps e = t.exps;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += shift[i];
        Coefficient d = c * t.coef;
        auto [it, inserted] = work.try_emplace(std::move(e), -d);
        if (!inserted) {
          it->second = it->second - d;
          if (it->second.is_zero()) work.erase(it);
        }
      }
    }
    return rem;
  }

  DensePoly spoly(const DensePoly& f, const DensePoly& g) const {
    const auto& a = f.front().exps;
    const auto& b = g.front().exps;
    Exps l(a.size());
    for (std::size_t i = 0; i < l.size(); ++i) l[i] = std::max(a[i], b[i]);
    auto shifted = [&](const DensePoly& p, const Exps& lead, const Coefficient& scale) {
      DensePoly out;
      for (const auto& t : p) {
        Exps e = t.exps;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += l[i] - lead[i];
        out.push_back({std::move(e), t.coef * scale});
      }
      return out;
    };
    DensePoly fa = shifted(f, a, f.front().coef.inverse());
    DensePoly gb = shifted(g, b, -g.front().coef.inverse());
    fa.insert(fa.end(), gb.begin(), gb.end());
    return combine(std::move(fa));
  }

  DensePoly combine(DensePoly terms) const {
    std::map<Exps, Coefficient> acc;
    for (auto& t : terms) {
      auto [it, inserted] = acc.try_emplace(t.exps, t.coef);
      if (!inserted) it->second = it->second + t.coef;
    }
    DensePoly out;
    for (auto& [e, c] : acc)
      if (!c.is_zero()) out.push_back({e, c});
    ring_.sort_desc(out);
    return out;
  }

  static bool coprime(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && b[i]) return false;
    return true;
  }

  std::vector<DensePoly> buchberger(std::vector<DensePoly> gens) const {
    std::vector<DensePoly> g;
    for (auto& f : gens)
      if (!f.empty()) g.push_back(monic(std::move(f)));
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < g.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
      auto [i, j] = pairs.front();
      pairs.pop_front();
      if (coprime(g[i].front().exps, g[j].front().exps)) continue;
      DensePoly h = reduce(spoly(g[i], g[j]), g);
      if (h.empty()) continue;
      g.push_back(monic(std::move(h)));
      for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
    }
    return reduced(std::move(g));
  }

  std::vector<DensePoly> reduced(std::vector<DensePoly> g) const {
    // Minimalize: drop elements whose leading monomial another (earlier, on
    // ties) element divides.
    std::vector<DensePoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
        if (i == j) continue;
        const bool equal = g[i].front().exps == g[j].front().exps;
        if (divides(g[j].front().exps, g[i].front().exps) && (!equal || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<DensePoly> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) out.push_back(monic(reduce(minimal[i], minimal, i)));
    std::sort(out.begin(), out.end(), [&](const DensePoly& a, const DensePoly& b) {
      return ring_.cmp(a.front().exps, b.front().exps) > 0;
    });
    return out;
  }

private:
  const DenseRing& ring_;
};

std::vector<DensePoly> densify(std::span<const Polynomial> polys, const TruncatedRing& tr,
                               const DenseRing& dense) {
  std::vector<DensePoly> out;
  for (const auto& f : polys) {
    if (!tr.contains(f))
      throw std::invalid_argument("finite oracle: polynomial uses an index above the width " +
                                  std::to_string(tr.width()));
    if (f.field() != dense.field())
      throw std::invalid_argument("finite oracle: polynomial over the wrong field");
    out.push_back(dense.to_dense(f));
  }
  return out;
}

}  // namespace

std::vector<Polynomial> finite_buchberger(std::span<const Polynomial> gens, const TruncatedRing& ring,
                                          const OrderSpec& order) {
  DenseRing dense(ring, order);
  FiniteGB gb(dense);
  std::vector<Polynomial> out;
  for (const auto& f : gb.buchberger(densify(gens, ring, dense))) out.push_back(dense.to_poly(f));
  return out;
}

bool finite_is_groebner(std::span<const Polynomial> elements, const TruncatedRing& ring,
                        const OrderSpec& order) {
  DenseRing dense(ring, order);
  FiniteGB gb(dense);
  std::vector<DensePoly> g;
  for (auto& f : densify(elements, ring, dense))
    if (!f.empty()) g.push_back(gb.monic(std::move(f)));
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!gb.reduce(gb.spoly(g[i], g[j]), g).empty()) return false;
  return true;
}

bool same_ideal(std::span<const Polynomial> a, std::span<const Polynomial> b,
                const TruncatedRing& ring, const OrderSpec& order) {
  if (ring.ring().field() != (a.empty() ? ring.ring().field() : a.front().field()) ||
      ring.ring().field() != (b.empty() ? ring.ring().field() : b.front().field()))
    throw std::invalid_argument("same_ideal: field mismatch");
  DenseRing dense(ring, order);
  FiniteGB gb(dense);
  auto da = densify(a, ring, dense);
  auto db = densify(b, ring, dense);
  auto ga = gb.buchberger(da);
  auto gbb = gb.buchberger(db);
  for (const auto& f : db)
    if (!gb.reduce(f, ga).empty()) return false;
  for (const auto& f : da)
    if (!gb.reduce(f, gbb).empty()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Rank-one tensors

std::vector<Polynomial> segre_quadrics(const Ring& ring, std::uint32_t k, const OrderSpec& order) {
  auto y = ring.symbol_id("y");
  if (!y || ring.symbol(*y).free_arity != k || !ring.symbol(*y).fixed_bounds.empty() ||
      ring.symbol(*y).constraint != IndexConstraint::none)
    throw std::invalid_argument("segre_quadrics needs a symbol y with " + std::to_string(k) +
                                " unconstrained free indices");
  if (k < 2) return {};
  const std::uint32_t span = 2 * k;
  const Field field = ring.field();
  const Coefficient one = Coefficient::one(field);
  auto var = [&](const std::vector<std::uint32_t>& m) {
    return Variable::make(*y, {}, m);
  };
  std::vector<Polynomial> out;
  std::set<Key> seen;
  std::vector<std::uint32_t> m(k, 1), mp(k, 1);
  // Odometer over pairs of multi-indices in [2k]^k.
  auto advance = [&](std::vector<std::uint32_t>& idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (++idx[i] <= span) return true;
      idx[i] = 1;
    }
    return false;
  };
  do {
    do {
      for (std::uint32_t subset = 1; subset + 1 < (1u << k); ++subset) {
        std::vector<std::uint32_t> a = m, b = mp;
        for (std::uint32_t i = 0; i < k; ++i)
          if (subset >> i & 1) std::swap(a[i], b[i]);
        Monomial lhs = Monomial(var(m)) * Monomial(var(mp));
        Monomial rhs = Monomial(var(a)) * Monomial(var(b));
        Polynomial q = Polynomial::from_terms(field, {{lhs, one}, {rhs, -one}});
        if (q.is_zero()) continue;
        Polynomial rep = make_monic(order, canonicalize(q).value);
        if (seen.insert(structural_key(rep)).second) out.push_back(std::move(rep));
      }
    } while (advance(mp));
  } while (advance(m));
  sort_canonically(out, order);
  return out;
}

Polynomial segre_substitute(const Polynomial& f, const Ring& source, const Ring& target) {
  auto y = source.symbol_id("y");
  auto x = target.symbol_id("x");
  if (!y || !x) throw std::invalid_argument("segre_substitute needs symbols y and x");
  const auto k = source.symbol(*y).free_arity;
  const auto& xs = target.symbol(*x);
  if (xs.fixed_bounds.size() != 1 || xs.fixed_bounds[0] < k || xs.free_arity != 1)
    throw std::invalid_argument("target symbol x must be x_{i,j} with i in [k]");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Term> image;
    for (const auto& [v, e] : t.monomial.terms()) {
      if (v.symbol != *y) throw std::invalid_argument("segre_substitute: non-y variable");
      auto free = v.free();
      for (std::uint32_t i = 0; i < k; ++i) {
        const std::uint32_t row = i + 1;
        image.emplace_back(Variable::make(*x, std::span(&row, 1), free.subspan(i, 1)), e);
      }
    }
    terms.push_back({Monomial::from_terms(std::move(image)), t.coefficient});
  }
  return Polynomial::from_terms(target.field(), std::move(terms));
}

}  // namespace eqgb
