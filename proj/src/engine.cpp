#include "eqgb/engine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>
#include <tuple>

#include "eqgb/wpo.hpp"

namespace eqgb {

Basis::Basis(RingPtr ring, OrderSpec order, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), order_(std::move(order)) {
  for (const auto& f : elements) push_back(f);
}

void Basis::push_back(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("basis elements must be nonzero");
  if (f.field() != ring_->field())
    throw std::invalid_argument("basis element over " + f.field().to_string() + ", ring over " +
                                ring_->field().to_string());
  elements_.push_back(make_monic(order_, f));
  leading_.push_back(leading_monomial(order_, elements_.back()));
}

void EngineConfig::validate() const {
  if ((max_steps && *max_steps == 0) || (max_width && *max_width == 0) ||
      (max_degree && *max_degree == 0))
    throw std::invalid_argument("engine bounds must be positive when present");
  if (threads == 0) throw std::invalid_argument("engine needs at least one thread");
}

std::string to_string(GBStatus s) {
  return s == GBStatus::complete ? "complete" : "budget-exhausted";
}

namespace {

struct Descending {
  const OrderSpec* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(*order, a, b) > 0; }
};

using WorkMap = std::map<Monomial, Coefficient, Descending>;

void subtract_scaled(WorkMap& work, const Polynomial& g, const Monomial& multiplier,
                     const Coefficient& c) {
  for (const auto& t : g.terms()) {
    Monomial m = t.monomial * multiplier;
    Coefficient delta = c * t.coefficient;
    auto [it, inserted] = work.try_emplace(std::move(m), -delta);
    if (!inserted) {
      it->second = it->second - delta;
      if (it->second.is_zero()) work.erase(it);
    }
  }
}

std::optional<std::pair<std::size_t, IncWitness>> find_reducer(const Basis& basis,
                                                               const Monomial& m,
                                                               std::size_t skip) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == skip) continue;
    if (auto w = pi_divides(basis.ring(), basis.leading(k), m)) return std::make_pair(k, *w);
  }
  return std::nullopt;
}

Reduction reduce_impl(const Polynomial& f, const Basis& basis, std::size_t skip) {
  if (f.field() != basis.ring().field())
    throw std::invalid_argument("polynomial over " + f.field().to_string() + " reduced modulo a basis over " +
                                basis.ring().field().to_string());
  Reduction out{Polynomial(f.field()), {}};
  WorkMap work(Descending{&basis.order()});
  for (const auto& t : f.terms()) work.emplace(t.monomial, t.coefficient);
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto top = work.begin();
    auto reducer = find_reducer(basis, top->first, skip);
    if (!reducer) {
      remainder.push_back({top->first, top->second});
      work.erase(top);
      continue;
    }
    auto& [k, partial] = *reducer;
    IncWitness pi = partial.extend_minimally(basis[k].support());
    Polynomial image = apply(pi, basis[k]);
    Monomial multiplier = *mono_quotient(top->first, apply(pi, basis.leading(k)));
    Coefficient c = top->second;  // basis elements are monic
    subtract_scaled(work, image, multiplier, c);
    out.certificate.push_back({std::move(pi), k, std::move(multiplier), std::move(c)});
  }
  out.remainder = Polynomial::from_terms(f.field(), std::move(remainder));
  return out;
}

}  // namespace

Reduction reduce(const Polynomial& f, const Basis& basis) {
  return reduce_impl(f, basis, static_cast<std::size_t>(-1));
}

Polynomial reconstruct(const Reduction& r, const Basis& basis) {
  Polynomial sum = r.remainder;
  for (const auto& step : r.certificate) {
    Polynomial image = apply(step.witness, basis[step.basis_index]);
    sum = sum + poly_scale(poly_mul_monomial(image, step.multiplier), step.coefficient);
  }
  return sum;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const OrderSpec& order) {
  auto lf = leading_term(order, f);
  auto lg = leading_term(order, g);
  Monomial l = lcm_mono(lf.monomial, lg.monomial);
  Polynomial a = poly_scale(poly_mul_monomial(f, *mono_quotient(l, lf.monomial)),
                            lf.coefficient.inverse());
  Polynomial b = poly_scale(poly_mul_monomial(g, *mono_quotient(l, lg.monomial)),
                            lg.coefficient.inverse());
  return a - b;
}

void sort_canonically(std::vector<Polynomial>& elements, const OrderSpec& order) {
  struct Keyed {
    std::size_t width;
    Monomial lead;
    std::size_t terms;
    std::vector<Term> ordered;
    Polynomial poly;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(elements.size());
  for (auto& f : elements) {
    auto ordered = sorted_terms(order, f);
    keyed.push_back({f.width(), ordered.front().monomial, f.size(), ordered, std::move(f)});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [&](const Keyed& a, const Keyed& b) {
    if (a.width != b.width) return a.width < b.width;
    if (auto c = compare(order, a.lead, b.lead); c != 0) return c < 0;
    if (a.terms != b.terms) return a.terms < b.terms;
    for (std::size_t i = 0; i < a.ordered.size(); ++i) {
      if (auto c = compare(order, a.ordered[i].monomial, b.ordered[i].monomial); c != 0) return c < 0;
      const auto sa = a.ordered[i].coefficient.to_string(), sb = b.ordered[i].coefficient.to_string();
      if (sa != sb) return sa < sb;
    }
    return false;
  });
  elements.clear();
  for (auto& k : keyed) elements.push_back(std::move(k.poly));
}

namespace {

struct PairKey {
  std::size_t width;
  std::uint64_t degree;
  std::uint64_t seq;
  std::size_t i, j;
  auto operator<=>(const PairKey&) const = default;
};

class BuchbergerRun {
public:
  BuchbergerRun(const RingPtr& ring, const OrderSpec& order, const EngineConfig& config)
      : config_(config), basis_(ring, order) {}

  GBResult run(const std::vector<Polynomial>& generators) {
    for (const auto& g : generators) add(g);
    bool exhausted = false;
    while (!queue_.empty()) {
      if (config_.max_steps && stats_.pairs_processed >= *config_.max_steps) {
        exhausted = true;
        break;
      }
      PairKey key = *queue_.begin();
      queue_.erase(queue_.begin());
      ++stats_.pairs_processed;
      process(key.i, key.j);
    }
    GBStatus status = (exhausted || incomplete_) ? GBStatus::budget_exhausted : GBStatus::complete;
    return {status, std::move(basis_), stats_};
  }

private:
  void add(const Polynomial& h) {
    basis_.push_back(h);
    const std::size_t n = basis_.size() - 1;
    stats_.max_width = std::max(stats_.max_width, basis_[n].width());
    for (std::size_t i = 0; i <= n; ++i) enqueue(i, n);
  }

  void enqueue(std::size_t i, std::size_t j) {
    Monomial l = lcm_mono(basis_.leading(i), basis_.leading(j));
    queue_.insert({l.width(), l.total_degree(), seq_++, i, j});
  }

  void process(std::size_t i, std::size_t j) {
    const Polynomial& f = basis_[i];
    const Polynomial& g = basis_[j];
    const auto supp_f = f.support(), supp_g = g.support();
    const Monomial& lf = basis_.leading(i);
    const Monomial& lg = basis_.leading(j);

    std::set<std::pair<IncWitness, IncWitness>> seen;
    std::vector<Polynomial> spolys;
    for (const auto& [sigma, tau, t] : orbit_pair_decomposition(f.max_index(), g.max_index())) {
      auto a = sigma.restrict_to(supp_f);
      auto b = tau.restrict_to(supp_g);
      if (i == j) {
        if (a == b) continue;
        if (b < a) std::swap(a, b);
      }
      if (!seen.emplace(a, b).second) continue;
      if (config_.max_width && t > *config_.max_width) {
        incomplete_ = true;
        continue;
      }
      if (config_.use_product_criterion && mono_coprime(apply(a, lf), apply(b, lg))) {
        ++stats_.product_criterion_skips;
        continue;
      }
      spolys.push_back(s_polynomial(apply(a, f), apply(b, g), basis_.order()));
    }
    stats_.spolys_formed += spolys.size();

    const std::size_t snapshot_size = basis_.size();
    std::vector<Reduction> reduced = reduce_all(spolys);
    for (auto& r : reduced) {
      stats_.reduction_steps += r.certificate.size();
      Polynomial h = std::move(r.remainder);
      if (!h.is_zero() && basis_.size() > snapshot_size) {
        auto again = reduce(h, basis_);
        stats_.reduction_steps += again.certificate.size();
        h = std::move(again.remainder);
      }
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (config_.max_degree && h.total_degree() > *config_.max_degree) {
        incomplete_ = true;
        continue;
      }
      add(h);
    }
  }

  std::vector<Reduction> reduce_all(const std::vector<Polynomial>& spolys) {
    std::vector<Reduction> out(spolys.size(), Reduction{Polynomial(basis_.ring().field()), {}});
    const std::size_t workers = std::min(config_.threads, spolys.size());
    if (workers <= 1) {
      for (std::size_t k = 0; k < spolys.size(); ++k) out[k] = reduce(spolys[k], basis_);
      return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < spolys.size(); k += workers) out[k] = reduce(spolys[k], basis_);
      });
    for (auto& th : pool) th.join();
    return out;
  }

  EngineConfig config_;
  Basis basis_;
  GBStats stats_;
  std::set<PairKey> queue_;
  std::uint64_t seq_ = 0;
  bool incomplete_ = false;
};

void check_generator(const Ring& ring, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("zero generator");
  if (g.field() != ring.field())
    throw std::invalid_argument("generator over " + g.field().to_string() + ", ring over " +
                                ring.field().to_string());
  for (const auto& t : g.terms())
    for (const auto& [v, e] : t.monomial.terms()) ring.validate(v);
}

}  // namespace

GBResult equivariant_buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators,
                                const OrderSpec& order, const EngineConfig& config) {
  config.validate();
  for (const auto& g : generators) check_generator(*ring, g);
  BuchbergerRun run(ring, order, config);
  return run.run(generators);
}

Basis interreduce(const Basis& basis) {
  std::vector<Polynomial> current = basis.elements();
  auto rebuild = [&](const std::vector<Polynomial>& elems) {
    return Basis(basis.ring_ptr(), basis.order(), elems);
  };
  // Replace elements whose leading monomial is Pi-divisible by another's until
  // the leading monomials form an antichain.
  bool changed = true;
  while (changed) {
    changed = false;
    Basis b = rebuild(current);
    for (std::size_t i = 0; i < b.size() && !changed; ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (i == j) continue;
        if (b.leading(i) == b.leading(j) && j > i) continue;  // keep the first of equal leads
        if (!pi_divides(b.ring(), b.leading(j), b.leading(i))) continue;
        Polynomial r = reduce_impl(b[i], b, i).remainder;
        if (r.is_zero())
          current.erase(current.begin() + static_cast<std::ptrdiff_t>(i));
        else
          current[i] = make_monic(b.order(), r);
        changed = true;
        break;
      }
    }
  }
  // Leading monomials are now fixed; one tail-reduction pass suffices.
  Basis b = rebuild(current);
  std::vector<Polynomial> out;
  out.reserve(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    out.push_back(make_monic(b.order(), reduce_impl(b[i], b, i).remainder));
  sort_canonically(out, basis.order());
  return rebuild(out);
}

Basis extract_elimination(const Basis& basis, std::span<const std::uint16_t> kept) {
  if (!basis.order().eliminates_all_but(kept)) {
    std::string names;
    for (auto s : kept) names += (names.empty() ? "" : ",") + basis.ring().symbol(s).name;
    throw std::invalid_argument("order is not an elimination order keeping {" + names + "}");
  }
  Basis out(basis.ring_ptr(), basis.order());
  for (const auto& f : basis.elements()) {
    bool only_kept = true;
    for (auto s : f.symbols())
      if (std::find(kept.begin(), kept.end(), s) == kept.end()) only_kept = false;
    if (only_kept) out.push_back(f);
  }
  return out;
}

CriterionAudit audit_criterion(const Basis& basis) {
  CriterionAudit audit;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const auto& f = basis[i];
      const auto& g = basis[j];
      for (const auto& [sigma, tau, t] : orbit_pair_decomposition(f.max_index(), g.max_index())) {
        Polynomial s = s_polynomial(apply(sigma.restrict_to(f.support()), f),
                                    apply(tau.restrict_to(g.support()), g), basis.order());
        ++audit.spolys_checked;
        if (s.is_zero()) continue;
        auto r = reduce(s, basis);
        if (!r.remainder.is_zero() && audit.holds) {
          audit.holds = false;
          audit.failure = "pair (" + std::to_string(i) + "," + std::to_string(j) + ") t=" +
                          std::to_string(t) + ": remainder " +
                          format_polynomial(basis.order(), basis.ring(), r.remainder);
        }
      }
    }
  }
  return audit;
}

}  // namespace eqgb
