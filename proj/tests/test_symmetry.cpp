#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "eqgb/random.hpp"
#include "eqgb/symmetry.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

IncWitness W(std::vector<IncWitness::Pair> pairs) { return IncWitness(std::move(pairs)); }

// All strictly increasing maps [p] -> [n], as image tuples.
std::vector<std::vector<std::uint32_t>> increasing_maps(std::uint32_t p, std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t next) {
    if (cur.size() == p) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t v = next; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<std::uint32_t> images(const IncWitness& w) { return w.targets(); }

}  // namespace

TEST_SUITE("symmetry") {

TEST_CASE("witness validity is extendability to Inc(N)") {
  CHECK(IncWitness::is_extendable(std::vector<IncWitness::Pair>{{1, 2}, {2, 5}}));
  CHECK(IncWitness::is_extendable(std::vector<IncWitness::Pair>{}));
  CHECK_FALSE(IncWitness::is_extendable(std::vector<IncWitness::Pair>{{2, 1}}));
  CHECK_FALSE(IncWitness::is_extendable(std::vector<IncWitness::Pair>{{1, 3}, {3, 4}}));
  CHECK_FALSE(IncWitness::is_extendable(std::vector<IncWitness::Pair>{{2, 3}, {1, 4}}));
  CHECK_FALSE(IncWitness::is_extendable(std::vector<IncWitness::Pair>{{1, 3}, {2, 3}}));
  CHECK_THROWS_AS(W({{1, 3}, {3, 4}}), std::invalid_argument);
  CHECK_NOTHROW(W({{1, 3}, {3, 5}}));
}

TEST_CASE("witness lookups, restriction and minimal extension") {
  auto w = W({{1, 2}, {3, 6}});
  CHECK(w.image(3) == 6u);
  CHECK_FALSE(w.image(2).has_value());
  CHECK_THROWS_AS(w.at(2), IncompleteWitness);
  std::vector<std::uint32_t> dom{1, 2, 3, 4};
  auto e = w.extend_minimally(dom);
  CHECK(e == W({{1, 2}, {2, 3}, {3, 6}, {4, 7}}));
  std::vector<std::uint32_t> three{3};
  CHECK(w.restrict_to(three) == W({{3, 6}}));
  std::vector<std::uint32_t> below{1};
  CHECK(W({{2, 4}}).extend_minimally(below) == W({{1, 1}, {2, 4}}));
}

TEST_CASE("apply substitutes free indices") {
  auto r = row_ring(2);
  CHECK(apply(W({{1, 2}, {2, 5}}), xr(*r, 1, 1) * xr(*r, 2, 2)) == xr(*r, 1, 2) * xr(*r, 2, 5));

  auto o = onefactor_ring();
  auto f = onefactor_listing(*o)[5];
  std::vector<std::uint32_t> dom{1, 2, 3, 4};
  CHECK(apply(IncWitness::identity(dom), f) == f);
  auto image = apply(W({{1, 1}, {2, 2}, {3, 4}, {4, 5}}), f);
  CHECK(image == poly(*o, {{1, y(*o, 5, 4) * y(*o, 2, 1)}, {-1, y(*o, 5, 1) * y(*o, 4, 2)}}));
  CHECK_THROWS_AS(apply(W({{1, 1}, {2, 2}}), f), IncompleteWitness);
}

TEST_CASE("canonicalize") {
  auto o = onefactor_ring();
  auto c = canonicalize(y(*o, 5, 3) * x(*o, 7));
  CHECK(c.value == y(*o, 2, 1) * x(*o, 3));
  CHECK(c.witness == W({{1, 3}, {2, 5}, {3, 7}}));

  auto m = y(*o, 3, 1) * x(*o, 2);
  auto id = canonicalize(m);
  CHECK(id.value == m);
  CHECK(id.witness == W({{1, 1}, {2, 2}, {3, 3}}));

  auto r = row_ring(2);
  auto row = canonicalize(xr(*r, 1, 9));
  CHECK(row.value == xr(*r, 1, 1));
  CHECK(row.witness == W({{1, 9}}));

  CHECK(canonicalize(Monomial()).value.is_one());

  auto f = poly(*o, {{1, x(*o, 4) * x(*o, 9)}, {-1, y(*o, 9, 4)}});
  auto cf = canonicalize(f);
  CHECK(cf.value == poly(*o, {{1, x(*o, 1) * x(*o, 2)}, {-1, y(*o, 2, 1)}}));
  CHECK(apply(cf.witness, cf.value) == f);
}

TEST_CASE("orbit pair decomposition examples") {
  auto d11 = orbit_pair_decomposition(1, 1);
  REQUIRE(d11.size() == 3);
  CHECK(d11[0].sigma == W({{1, 1}}));
  CHECK(d11[0].tau == W({{1, 1}}));
  CHECK(d11[1].sigma == W({{1, 1}}));
  CHECK(d11[1].tau == W({{1, 2}}));
  CHECK(d11[2].sigma == W({{1, 2}}));
  CHECK(d11[2].tau == W({{1, 1}}));

  auto d02 = orbit_pair_decomposition(0, 2);
  REQUIRE(d02.size() == 1);
  CHECK(d02[0].sigma.empty());
  CHECK(d02[0].tau == W({{1, 1}, {2, 2}}));

  auto d22 = orbit_pair_decomposition(2, 2);
  CHECK(d22.size() == 13);
  std::map<std::uint32_t, int> by_t;
  for (const auto& w : d22) ++by_t[w.t];
  CHECK(by_t[2] == 1);
  CHECK(by_t[3] == 6);
  CHECK(by_t[4] == 6);

  CHECK(orbit_pair_decomposition(0, 0).size() == 1);
}

TEST_CASE("orbit pair decomposition is sorted by (t, sigma mask, tau mask)") {
  auto mask = [](const IncWitness& w) {
    std::uint64_t m = 0;
    for (auto t : w.targets()) m |= std::uint64_t{1} << (t - 1);
    return m;
  };
  for (std::uint32_t p = 0; p <= 3; ++p)
    for (std::uint32_t q = 0; q <= 3; ++q) {
      auto d = orbit_pair_decomposition(p, q);
      for (std::size_t i = 1; i < d.size(); ++i) {
        auto a = std::make_tuple(d[i - 1].t, mask(d[i - 1].sigma), mask(d[i - 1].tau));
        auto b = std::make_tuple(d[i].t, mask(d[i].sigma), mask(d[i].tau));
        CHECK(a < b);
      }
    }
}

TEST_CASE("orbit pair decomposition is complete and unique within [p+q+2]") {
  for (std::uint32_t p = 0; p <= 3; ++p) {
    for (std::uint32_t q = 0; q <= 3; ++q) {
      const auto decomposition = orbit_pair_decomposition(p, q);
      const std::uint32_t n = p + q + 2;
      for (const auto& s : increasing_maps(p, n)) {
        for (const auto& t : increasing_maps(q, n)) {
          std::vector<std::uint32_t> u(s);
          u.insert(u.end(), t.begin(), t.end());
          std::sort(u.begin(), u.end());
          u.erase(std::unique(u.begin(), u.end()), u.end());
          int hits = 0;
          for (const auto& d : decomposition) {
            if (d.t != u.size()) continue;
            // The only candidate pi is the order-preserving bijection [t] -> u.
            auto ok = [&](const IncWitness& part, const std::vector<std::uint32_t>& want) {
              auto imgs = images(part);
              for (std::size_t i = 0; i < imgs.size(); ++i)
                if (u[imgs[i] - 1] != want[i]) return false;
              return true;
            };
            if (ok(d.sigma, s) && ok(d.tau, t)) ++hits;
          }
          CHECK(hits == 1);
        }
      }
    }
  }
}

TEST_CASE("action properties on random inputs") {
  auto r = onefactor_ring();
  Sampler s(5);
  for (int i = 0; i < 3000; ++i) {
    auto u = s.monomial(*r, 7, 3), v = s.monomial(*r, 7, 3);
    auto supp = (u * v).support();
    auto sigma = s.witness(supp, 3);
    auto pi = s.witness(sigma.targets(), 3);
    CHECK(apply(compose(pi, sigma), u) == apply(pi, apply(sigma, u)));
    CHECK(apply(sigma, u * v) == apply(sigma, u) * apply(sigma, v));
    CHECK(apply(sigma, lcm_mono(u, v)) == lcm_mono(apply(sigma, u), apply(sigma, v)));
    auto c = canonicalize(u);
    CHECK(canonicalize(apply(sigma.restrict_to(u.support()), u)).value == c.value);
    CHECK(canonicalize(c.value).value == c.value);
    CHECK(apply(c.witness, c.value) == u);
    const auto image = apply(sigma, u);
    for (const auto& [var, e] : image.terms()) CHECK(r->satisfies_constraint(var));
  }
}

}  // TEST_SUITE
