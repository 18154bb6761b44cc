#include <doctest.h>

#include "eqgb/random.hpp"
#include "helpers.hpp"

using namespace testing;

TEST_SUITE("algebra_core") {

TEST_CASE("rational coefficients stay in lowest terms") {
  auto Q = Field::rational();
  auto a = Coefficient::parse(Q, "6/-4");
  CHECK(a.to_string() == "-3/2");
  CHECK(a.is_negative());
  CHECK((a + Coefficient::parse(Q, "3/2")).is_zero());
  CHECK((a * a.inverse()).is_one());
  CHECK(Coefficient::parse(Q, "+7").to_string() == "7");
  CHECK_THROWS_AS(Coefficient::parse(Q, "1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Coefficient::parse(Q, "1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Coefficient::parse(Q, ""), std::invalid_argument);
  CHECK_THROWS_AS(Coefficient::zero(Q).inverse(), std::domain_error);
}

TEST_CASE("prime field arithmetic") {
  auto F7 = Field::prime(7);
  auto a = Coefficient::from_integer(F7, -1);
  CHECK(a.to_string() == "6");
  CHECK(!a.is_negative());
  CHECK((a * a).is_one());
  CHECK((Coefficient::from_integer(F7, 3) * Coefficient::from_integer(F7, 3).inverse()).is_one());
  CHECK(Coefficient::parse(F7, "1/2").to_string() == "4");
  CHECK_THROWS_AS(Coefficient::parse(F7, "1/14"), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(4294967311ull), std::invalid_argument);
  auto b = Coefficient::from_integer(Field::prime(5), 1);
  CHECK_THROWS_AS(a + b, DomainMismatch);
  CHECK_THROWS_AS(a * Coefficient::one(Field::rational()), DomainMismatch);
}

TEST_CASE("schemas and variables are validated") {
  using V = std::vector<SymbolSchema>;
  CHECK_THROWS(Ring(V{{"x", {0}, 1, IndexConstraint::none}}, Field::rational()));
  CHECK_THROWS(Ring(V{{"y", {}, 1, IndexConstraint::strictly_decreasing}}, Field::rational()));
  CHECK_THROWS(Ring(V{{"x", {}, 1, {}}, {"x", {}, 2, {}}}, Field::rational()));
  CHECK_THROWS(Ring(V{{"", {}, 1, {}}}, Field::rational()));
  CHECK_THROWS(Ring(V{{"z", {1, 1, 1}, 4, {}}}, Field::rational()));

  auto r = onefactor_ring();
  CHECK_NOTHROW(r->variable("y", {}, {2, 1}));
  CHECK_THROWS_AS(r->variable("y", {}, {1, 2}), InvalidVariable);
  CHECK_THROWS_AS(r->variable("y", {}, {1, 1}), InvalidVariable);
  CHECK_THROWS_AS(r->variable("x", {}, {0}), InvalidVariable);
  CHECK_THROWS_AS(r->variable("x", {}, {1, 2}), InvalidVariable);
  CHECK_THROWS_AS(r->variable("w", {}, {1}), InvalidVariable);

  auto rows = row_ring(2);
  CHECK_NOTHROW(rows->variable("x", {2}, {9}));
  CHECK_THROWS_AS(rows->variable("x", {3}, {1}), InvalidVariable);

  auto distinct = Ring(V{{"z", {}, 3, IndexConstraint::pairwise_distinct}}, Field::rational());
  CHECK_NOTHROW(distinct.variable("z", {}, {3, 1, 2}));
  CHECK_THROWS_AS(distinct.variable("z", {}, {3, 1, 3}), InvalidVariable);

  CHECK(r->variable_name(r->variable("y", {}, {4, 3})) == "y43");
  CHECK(r->variable_name(r->variable("y", {}, {12, 3})) == "y[12,3]");
  CHECK(rows->variable_name(rows->variable("x", {2}, {5})) == "x25");
}

TEST_CASE("mono_mul") {
  auto r = row_ring(2);
  auto a = xr(*r, 1, 1);
  CHECK(a * a == xr(*r, 1, 1, 2));
  CHECK(Monomial() * a == a);
  auto b = xr(*r, 2, 3);
  CHECK((a * b) * b == a * xr(*r, 2, 3, 2));
  CHECK((a * b).support() == std::vector<std::uint32_t>{1, 3});
  CHECK((a * b).total_degree() == 2);
}

TEST_CASE("mono_divides") {
  auto r = row_ring(2);
  CHECK(mono_divides(xr(*r, 1, 1), xr(*r, 1, 1) * xr(*r, 2, 2)));
  CHECK_FALSE(mono_divides(xr(*r, 1, 1, 2), xr(*r, 1, 1)));
  CHECK(mono_divides(Monomial(), xr(*r, 2, 7)));
  CHECK(mono_quotient(xr(*r, 1, 1, 3) * xr(*r, 2, 1), xr(*r, 1, 1)) == xr(*r, 1, 1, 2) * xr(*r, 2, 1));
  CHECK_FALSE(mono_quotient(xr(*r, 1, 1), xr(*r, 1, 2)).has_value());
}

TEST_CASE("lcm_mono") {
  auto r = row_ring(2);
  CHECK(lcm_mono(xr(*r, 1, 1), xr(*r, 2, 1)) == xr(*r, 1, 1) * xr(*r, 2, 1));
  auto m = xr(*r, 1, 4) * xr(*r, 2, 2, 3);
  CHECK(lcm_mono(m, m) == m);
  CHECK(lcm_mono(xr(*r, 1, 1, 2), xr(*r, 1, 1) * xr(*r, 1, 2)) == xr(*r, 1, 1, 2) * xr(*r, 1, 2));
  CHECK(mono_coprime(xr(*r, 1, 1), xr(*r, 2, 1)));
  CHECK_FALSE(mono_coprime(xr(*r, 1, 1), xr(*r, 1, 1) * xr(*r, 2, 1)));
}

TEST_CASE("polynomial arithmetic") {
  auto r = onefactor_ring();
  auto f = onefactor_generator(*r);
  CHECK((f + (-f)).is_zero());
  CHECK(f * Polynomial::constant(r->field(), Coefficient::one(r->field())) == f);
  auto s = poly(*r, {{1, x(*r, 1)}, {1, x(*r, 2)}});
  auto d = poly(*r, {{1, x(*r, 1)}, {-1, x(*r, 2)}});
  CHECK(s * d == poly(*r, {{1, x(*r, 1, 2)}, {-1, x(*r, 2, 2)}}));
  CHECK(poly_scale(f, Coefficient::zero(r->field())).is_zero());
  CHECK(f.support() == std::vector<std::uint32_t>{1, 2});
  CHECK(f.max_index() == 2);
  CHECK(f.total_degree() == 2);
  CHECK(f.coefficient(y(*r, 2, 1)).is_one());
  CHECK(f.coefficient(y(*r, 3, 1)).is_zero());
  CHECK(Polynomial::from_terms(r->field(), {{x(*r, 1), Coefficient::from_integer(r->field(), 2)},
                                            {x(*r, 1), Coefficient::from_integer(r->field(), -2)}})
            .is_zero());
}

TEST_CASE("mixed fields are rejected") {
  auto q = onefactor_ring();
  auto p = onefactor_ring(Field::prime(101));
  auto f = onefactor_generator(*q);
  auto g = onefactor_generator(*p);
  CHECK_THROWS_AS(f + g, DomainMismatch);
  CHECK_THROWS_AS(f * g, DomainMismatch);
  CHECK_THROWS_AS(Polynomial::from_terms(Field::rational(), {{x(*q, 1), Coefficient::one(Field::prime(5))}}),
                  DomainMismatch);
}

TEST_CASE("monoid and ring laws on random inputs") {
  auto r = onefactor_ring();
  Sampler s(11);
  for (int i = 0; i < 2000; ++i) {
    auto u = s.monomial(*r, 6, 3), v = s.monomial(*r, 6, 3), w = s.monomial(*r, 6, 3);
    CHECK(u * v == v * u);
    CHECK((u * v) * w == u * (v * w));
    CHECK(mono_divides(u, u * w));
    CHECK(mono_quotient(u * w, u) == w);
    auto l = lcm_mono(u, v);
    CHECK(mono_divides(u, l));
    CHECK(mono_divides(v, l));
    CHECK(mono_divides(l, u * v));
    CHECK(mono_divides(u, v) == mono_quotient(v, u).has_value());
  }
  for (int i = 0; i < 300; ++i) {
    auto rand_poly = [&] {
      std::vector<Term> ts;
      for (int k = 0; k < 4; ++k)
        ts.push_back({s.monomial(*r, 5, 2), Coefficient::parse(r->field(), std::to_string(s.between(-9, 9)) + "/" +
                                                                         std::to_string(s.between(1, 7)))});
      return Polynomial::from_terms(r->field(), ts);
    };
    auto f = rand_poly(), g = rand_poly(), h = rand_poly();
    CHECK((f + g) - g == f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
  }
}

}  // TEST_SUITE
