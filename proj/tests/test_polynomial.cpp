#include <catch_amalgamated.hpp>

#include <random>

#include "massey/polynomial.hpp"
#include "support.hpp"

using namespace massey;

namespace {

Polynomial random_poly(std::mt19937& rng, std::size_t vars, const Field& f) {
  std::uniform_int_distribution<VarId> var(0, static_cast<VarId>(vars - 1));
  std::uniform_int_distribution<int> terms(0, 4), exp(0, 2);
  Polynomial p;
  for (int t = terms(rng); t > 0; --t) {
    Polynomial m(support::random_scalar(rng, f));
    for (int k = exp(rng); k > 0; --k) m = m * Polynomial::variable(var(rng), f);
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial basics") {
  auto x = Polynomial::variable(0), y = Polynomial::variable(1);
  auto p = x * x + FieldElement(2) * x * y + Polynomial(FieldElement(-1));
  CHECK(p.total_degree() == 2);
  CHECK(p.degree_in(1) == 1);
  CHECK(p.to_string({"x", "y"}) == "x^2 + 2*x*y - 1");
  CHECK((p - p).is_zero());
  CHECK(p.substitute(1, Polynomial(FieldElement(0))) == x * x - Polynomial(FieldElement(1)));
  CHECK_THROWS_AS(p.univariate_coefficients(0), std::invalid_argument);
  auto q = x * x + Polynomial(FieldElement(1));
  auto c = q.univariate_coefficients(0);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == FieldElement(1));
  CHECK(c[1].is_zero());
  auto lin = FieldElement(3) * x + y;
  CHECK(lin.linear_constant_coefficient(0) == FieldElement(3));
  CHECK_FALSE((x * y).linear_constant_coefficient(0));
}

TEST_CASE("evaluation is a ring homomorphism and commutes with substitution") {
  std::mt19937 rng(31);
  Field f = Field::adjoin_sqrt(-1);
  for (int t = 0; t < 200; ++t) {
    auto p = random_poly(rng, 3, f), q = random_poly(rng, 3, f);
    std::vector<FieldElement> at(3);
    for (auto& v : at) v = support::random_scalar(rng, f);
    CHECK((p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at));
    CHECK((p + q).evaluate(at) == p.evaluate(at) + q.evaluate(at));
    auto sub = p.substitute(0, q);
    auto at2 = at;
    at2[0] = q.evaluate(at);
    CHECK(sub.evaluate(at) == p.evaluate(at2));
  }
}
