#include <doctest.h>

#include <filesystem>

#include "eqgb/problem_io.hpp"
#include "eqgb/random.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

const std::filesystem::path kProblems = EQGB_PROBLEMS_DIR;

std::string error_of(const std::string& text) {
  try {
    parse_problem(parse_json_text(text));
  } catch (const ProblemError& e) {
    return e.what();
  }
  return "";
}

const char* kHeader = R"("ring": [{"name": "x", "free_arity": 1},
                                  {"name": "y", "free_arity": 2, "constraint": "strictly-decreasing"}])";

std::string with_generators(const std::string& gens, const std::string& extra = "") {
  return std::string("{") + kHeader + R"(, "order": "elim-onefactor", "generators": )" + gens + extra + "}";
}

}  // namespace

TEST_SUITE("problem_io") {

TEST_CASE("shipped problems round-trip") {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kProblems)) {
    if (entry.path().extension() != ".json") continue;
    auto doc = load_json(entry.path());
    if (!doc.contains("generators")) continue;
    ++seen;
    auto p = parse_problem(doc);
    auto printed = print_problem(p);
    CHECK(parse_problem(printed) == p);
    CHECK(print_problem(parse_problem(printed)).dump() == printed.dump());
  }
  CHECK(seen >= 6);
}

TEST_CASE("one-factor problem contents") {
  auto p = parse_problem(load_json(kProblems / "onefactor.json"));
  CHECK(p.order.preset == "elim-onefactor");
  REQUIRE(p.generators.size() == 1);
  CHECK(p.generators[0] == onefactor_generator(*p.ring));
  CHECK(p.ring->field().is_rational());
  CHECK_FALSE(p.basis.has_value());
  CHECK(p.config == EngineConfig{});
}

TEST_CASE("random problems round-trip") {
  Sampler s(53);
  for (int i = 0; i < 100; ++i) {
    ProblemFile p;
    p.ring = s.below(2) ? onefactor_ring(Field::prime(101)) : onefactor_ring();
    if (s.below(2)) {
      p.order.preset = "rowlex";
    } else {
      p.order.precedence = {"y", "x"};
      p.order.grading = s.below(2) ? Grading::total_degree : Grading::none;
    }
    auto random_poly = [&] {
      std::vector<Term> ts;
      for (int k = 0; k < 3; ++k)
        ts.push_back({s.monomial(*p.ring, 9, 3),
                      Coefficient::parse(p.ring->field(), std::to_string(s.between(-20, 20)) + "/" +
                                                              std::to_string(s.between(1, 9)))});
      return Polynomial::from_terms(p.ring->field(), ts);
    };
    for (int k = 0; k < 3; ++k) {
      auto f = random_poly();
      if (!f.is_zero()) p.generators.push_back(f);
    }
    if (s.below(2)) p.target = random_poly();
    if (s.below(2)) p.basis = p.generators;
    if (s.below(2)) p.config.max_steps = 1 + s.below(50);
    if (s.below(2)) p.config.max_degree = 1 + s.below(5);
    p.config.use_product_criterion = s.below(2);
    auto text = print_problem(p).dump(2);
    CHECK(parse_problem(parse_json_text(text)) == p);
  }
}

TEST_CASE("syntax errors report line and column") {
  auto msg = error_of("{\n  \"ring\": [\n    {\"name\": \"x\",, }\n  ]\n}");
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(msg.find("column") != std::string::npos);
}

TEST_CASE("schema errors report the field path") {
  CHECK(error_of(with_generators("[]", R"(, "colour": 1)")).find("colour: unknown field") != std::string::npos);
  CHECK(error_of(R"({"generators": []})").find("ring: missing field") != std::string::npos);
  CHECK(error_of(with_generators(R"([[{"coefficient": "1", "factors": [{"symbol": "z", "free": [1]}]}]])"))
            .find("generators[0][0].factors[0].symbol: unknown symbol") != std::string::npos);
  CHECK(error_of(with_generators(R"([[{"coefficient": "1/0", "factors": []}]])"))
            .find("generators[0][0].coefficient") != std::string::npos);
  CHECK(error_of(with_generators(R"([[{"coefficient": 1.5, "factors": []}]])"))
            .find("generators[0][0].coefficient") != std::string::npos);
  CHECK(error_of(with_generators(R"([[{"coefficient": "1", "factors": [{"symbol": "x", "free": [1], "exponent": 0}]}]])"))
            .find("generators[0][0].factors[0].exponent") != std::string::npos);
  CHECK(error_of(with_generators("[[]]")).find("generators[0]: zero polynomial") != std::string::npos);
  CHECK(error_of(with_generators("{}")).find("generators: expected an array") != std::string::npos);
  CHECK(error_of(with_generators("[]", R"(, "config": {"max_steps": 0})")).find("config.max_steps") !=
        std::string::npos);
  CHECK(error_of(with_generators("[]", R"(, "config": {"max_steps": -3})")).find("config.max_steps") !=
        std::string::npos);
  CHECK(error_of(with_generators("[]", R"(, "field": {"kind": "prime", "p": 12})")).find("field.p") !=
        std::string::npos);
  CHECK(error_of(std::string("{") + kHeader + R"(, "order": "grevlex", "generators": []})").find("order") !=
        std::string::npos);
  CHECK(error_of(std::string("{") + kHeader + R"(, "order": {"precedence": ["x"]}, "generators": []})")
            .find("order") != std::string::npos);
  CHECK(error_of(R"({"ring": [{"name": "y", "free_arity": 1, "constraint": "strictly-decreasing"}], "generators": []})")
            .find("ring") != std::string::npos);
  CHECK(error_of(R"({"ring": [{"name": "y", "free_arity": 1, "constraint": "sorted"}], "generators": []})")
            .find("ring[0].constraint") != std::string::npos);
}

TEST_CASE("constraint violations name the offending term") {
  auto msg = error_of(with_generators(
      R"([[{"coefficient": "1", "factors": [{"symbol": "x", "free": [2]}]},
           {"coefficient": "-2", "factors": [{"symbol": "y", "free": [1, 2]}]}]])"));
  CHECK(msg.find("generators[0][1].factors[0]") != std::string::npos);
  CHECK(msg.find("y12 violates constraint strictly-decreasing") != std::string::npos);
  CHECK(msg.find("-2*y[1,2]") != std::string::npos);
}

TEST_CASE("defaults") {
  auto p = parse_problem(parse_json_text(R"({"ring": [{"name": "x", "fixed": [2], "free_arity": 1}],
                                             "generators": [[{"coefficient": 3, "factors": [{"symbol": "x", "fixed": [1], "free": [4]}]}]]})"));
  CHECK(p.order.preset == "rowlex");
  CHECK(p.ring->field().is_rational());
  CHECK(p.generators[0].terms()[0].coefficient == Coefficient::from_integer(p.ring->field(), 3));
}

TEST_CASE("posets and trees") {
  auto P = parse_poset(parse_json_text(R"({"leq": [[true, true], [false, true]]})"), "poset");
  CHECK(P.leq(0, 1));
  CHECK_FALSE(P.leq(1, 0));
  CHECK_THROWS_AS(parse_poset(parse_json_text(R"({"leq": [[true, true], [true, true]]})"), "poset"), ProblemError);
  CHECK_THROWS_AS(parse_poset(parse_json_text(R"({"chain": 2, "antichain": 2})"), "poset"), ProblemError);
  auto t = parse_tree(parse_json_text(R"({"label": 0, "children": [{"label": 1}, {"label": 2, "children": []}]})"), "left");
  CHECK(t.size() == 3);
  CHECK_THROWS_AS(parse_tree(parse_json_text(R"({"children": []})"), "left"), ProblemError);
}

}  // TEST_SUITE
