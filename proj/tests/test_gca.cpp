#include <catch_amalgamated.hpp>

#include <random>

#include "massey/corpus.hpp"
#include "massey/gca.hpp"
#include "support.hpp"

using namespace massey;

namespace {

FreeCdgaPtr mixed() {
  // Odd and even generators together, d nonzero in several places.
  std::vector<FreeCdga::DifferentialSpec> d;
  d.push_back({"z", parse_expression("x*y"), 0});
  d.push_back({"w", parse_expression("x^2"), 0});
  return FreeCdga::create(Field::rationals(), {{"x", 1}, {"y", 1}, {"t", 2}, {"z", 1}, {"w", 1}}, std::move(d));
}

}  // namespace

TEST_CASE("Koszul signs") {
  auto a = mixed();
  auto x = a->generator("x"), y = a->generator("y"), t = a->generator("t");
  CHECK((x * x).is_zero());
  CHECK(x * y == -(y * x));
  CHECK(x * t == t * x);
  CHECK(!(t * t).is_zero());
  CHECK((t * t).to_string() == "t^2");
  auto xyt = x * y * t;
  CHECK(xyt == t * x * y);
  CHECK(xyt == -(y * t * x));
}

TEST_CASE("graded basis dimensions") {
  auto a = build_free("iwasawa_real");
  for (int k = 0; k <= 6; ++k) {
    static const std::size_t binom[] = {1, 6, 15, 20, 15, 6, 1};
    CHECK(a->dimension(k) == binom[k]);
  }
  CHECK(a->dimension(7) == 0);
  CHECK(a->top_degree() == 6);
  auto q = build_free("quadruple");
  CHECK_FALSE(q->top_degree());
  CHECK(q->dimension(8) == 8);  // x^4, x^2 a, x^2 b, a^2, a b, b^2, x u, x v
}

TEST_CASE("Leibniz and graded commutativity on random elements") {
  std::mt19937 rng(41);
  for (const char* id : {"iwasawa_real", "quadruple", "heisenberg_squared", "iwasawa_complex"}) {
    auto a = build_free(id);
    for (int t = 0; t < 100; ++t) {
      std::uniform_int_distribution<int> deg(0, 5);
      int p = deg(rng), q = deg(rng);
      auto x = support::random_cochain(*a, p, rng), y = support::random_cochain(*a, q, rng);
      auto lhs = differential(*a, multiply(*a, x, y));
      auto rhs = multiply(*a, differential(*a, x), y) + scale(multiply(*a, x, differential(*a, y)), sign_of(p));
      CHECK(lhs == rhs);
      CHECK(multiply(*a, x, y) == scale(multiply(*a, y, x), sign_of(p * q)));
    }
  }
}

TEST_CASE("element and cochain forms agree") {
  auto a = build_free("quadruple");
  auto e = a->element("2*x*u - a^2 - b^2");
  auto c = a->to_cochain(e);
  CHECK(c.degree == 8);
  CHECK(a->to_element(c) == e);
  CHECK(differential(a->generator("w")) == e);
  CHECK(to_string(*a, c) == a->element_to_string(e));
}

TEST_CASE("definitions are validated") {
  auto create = [](std::vector<Generator> g, const char* gen, const char* expr) {
    std::vector<FreeCdga::DifferentialSpec> d;
    d.push_back({gen, parse_expression(expr), 0});
    return FreeCdga::create(Field::rationals(), std::move(g), std::move(d));
  };
  CHECK_THROWS_AS(create({{"x", 2}, {"w", 7}}, "w", "x"), std::invalid_argument);           // degree mismatch
  CHECK_THROWS_AS(create({{"x", 1}, {"y", 1}}, "y", "x + x*y"), std::invalid_argument);    // not homogeneous
  CHECK_THROWS_AS(create({{"x", 1}}, "q", "x"), std::invalid_argument);                    // unknown generator
  CHECK_THROWS_AS(create({{"x", 1}}, "x", "q"), ParseError);                               // unknown atom
  CHECK_THROWS_AS(create({{"x", 0}}, "x", "0"), std::invalid_argument);                    // degree 0
  CHECK_THROWS_AS(create({{"s", 1}}, "s", "0"), std::invalid_argument);                    // reserved
  // d^2 != 0: dz = y but dy = t^2.
  std::vector<FreeCdga::DifferentialSpec> d;
  d.push_back({"y", parse_expression("t^2"), 0});
  d.push_back({"z", parse_expression("y"), 0});
  CHECK_THROWS_AS(FreeCdga::create(Field::rationals(), {{"t", 2}, {"y", 3}, {"z", 2}}, std::move(d)),
                  std::invalid_argument);
}
