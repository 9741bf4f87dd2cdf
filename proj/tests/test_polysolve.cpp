#include <catch_amalgamated.hpp>

#include <random>

#include "massey/polysolve.hpp"
#include "support.hpp"

using namespace massey;

namespace {

Polynomial var(VarId v, const Field& f = Field()) { return Polynomial::variable(v, f); }
Polynomial num(long c) { return Polynomial(FieldElement(c)); }

}  // namespace

TEST_CASE("linear systems: solutions and certificates") {
  PolySystem s{Field(), {"a", "b", "c"}, {var(0) + var(1) - num(1), var(1) - var(2), var(0) + num(2) * var(1) - var(2) - num(1)}};
  auto o = solve_linear(s);
  REQUIRE(o.status == SolveStatus::Solution);
  CHECK(satisfies(s, o.assignment));
  CHECK(o.solution_dimension == 1);

  PolySystem bad{Field(), {"a", "b"}, {var(0) + var(1) - num(1), var(0) + var(1) - num(2)}};
  auto r = solve_linear(bad);
  REQUIRE(r.status == SolveStatus::NoSolution);
  REQUIRE(r.refutation);
  CHECK(r.refutation->kind == Refutation::Kind::Inconsistent);
  CHECK(replay(bad, *r.refutation));
  CHECK_THROWS_AS(solve_linear(PolySystem{Field(), {"a"}, {var(0) * var(0)}}), std::invalid_argument);
}

TEST_CASE("random linear systems agree with rank counting") {
  std::mt19937 rng(61);
  for (int t = 0; t < 100; ++t) {
    std::uniform_int_distribution<int> size(1, 6);
    std::size_t m = size(rng), n = size(rng);
    PolySystem s{Field(), {}, {}};
    for (std::size_t v = 0; v < n; ++v) s.variables.push_back("v" + std::to_string(v));
    std::vector<std::vector<mpq_class>> a, ab;
    std::bernoulli_distribution keep(0.5);
    for (std::size_t r = 0; r < m; ++r) {
      Polynomial e;
      std::vector<mpq_class> row(n + 1);
      for (std::size_t v = 0; v < n; ++v)
        if (keep(rng)) {
          row[v] = support::random_rational(rng, 3);
          e += FieldElement(row[v]) * var(static_cast<VarId>(v));
        }
      row[n] = support::random_rational(rng, 3);
      e += Polynomial(FieldElement(row[n]));
      ab.push_back(row);
      row.pop_back();
      a.push_back(row);
      s.equations.push_back(e);
    }
    auto o = solve_linear(s);
    bool solvable = support::oracle_rank(a) == support::oracle_rank(ab);
    CHECK((o.status == SolveStatus::Solution) == solvable);
    if (o.status == SolveStatus::Solution) {
      CHECK(satisfies(s, o.assignment));
      CHECK(o.solution_dimension == n - support::oracle_rank(a));
    } else {
      CHECK(replay(s, *o.refutation));
    }
  }
}

TEST_CASE("quadratic roots") {
  auto roots = roots_of_quadratic({FieldElement(1), FieldElement(0), FieldElement(1)}, Field::rationals());
  CHECK(roots.empty());
  Field i = Field::adjoin_sqrt(-1);
  roots = roots_of_quadratic({FieldElement(1), FieldElement(0), FieldElement(-1)}, i);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == FieldElement(1, 0, i));
  roots = roots_of_quadratic({FieldElement(1), FieldElement(0), FieldElement(1)}, i);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == FieldElement::sqrt_theta(i));
  roots = roots_of_quadratic({FieldElement(0), FieldElement(3), FieldElement(1)}, Field::rationals());
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].is_zero());
  roots = roots_of_quadratic({FieldElement(1), FieldElement(-2), FieldElement(1)}, Field::rationals());
  CHECK(roots.size() == 1);
}

TEST_CASE("elimination: k1 k3 = 1 with k1 + k3 = 0") {
  // The shape of the quadruple obstruction: no rational zero, a zero over Q(i).
  for (Field f : {Field::rationals(), Field::adjoin_sqrt(-1)}) {
    PolySystem s{f, {"k1", "k3", "k5"}, {var(0, f) + var(1, f), var(0, f) * var(1, f) - num(1), var(2, f)}};
    auto o = eliminate_and_decide(s);
    if (f.is_rationals()) {
      REQUIRE(o.status == SolveStatus::NoSolution);
      CHECK(replay(s, *o.refutation));
      CHECK_FALSE(satisfies(s, {FieldElement(1), FieldElement(-1), FieldElement(0)}));
    } else {
      REQUIRE(o.status == SolveStatus::Solution);
      CHECK(satisfies(s, o.assignment));
    }
  }
}

TEST_CASE("elimination: branching on roots") {
  // t (t - 1) = 0 with t = 0 making the rest inconsistent: needs the second root.
  PolySystem s{Field(), {"t", "u"}, {var(0) * var(0) - var(0), var(0) * var(1) - num(1)}};
  auto o = eliminate_and_decide(s);
  REQUIRE(o.status == SolveStatus::Solution);
  CHECK(satisfies(s, o.assignment));
  CHECK(o.assignment[0] == FieldElement(1));

  PolySystem none{Field(), {"t", "u"}, {var(0) * var(0) - var(0), var(0) * var(1) - num(1), var(1) - num(2)}};
  auto r = eliminate_and_decide(none);
  REQUIRE(r.status == SolveStatus::NoSolution);
  CHECK(replay(none, *r.refutation));
}

TEST_CASE("replay rejects tampered certificates") {
  PolySystem s{Field(), {"t"}, {var(0) * var(0) + num(1)}};
  auto o = eliminate_and_decide(s);
  REQUIRE(o.status == SolveStatus::NoSolution);
  CHECK(replay(s, *o.refutation));
  PolySystem other{Field(), {"t"}, {var(0) * var(0) - num(1)}};
  CHECK_FALSE(replay(other, *o.refutation));
  Refutation fake;
  fake.kind = Refutation::Kind::Inconsistent;
  fake.multipliers = {FieldElement(1)};
  CHECK_FALSE(replay(s, fake));
}

TEST_CASE("bounded search and unknown") {
  // x^2 + y^2 = 5 has rational points; nothing univariate to eliminate.
  PolySystem s{Field(), {"x", "y"}, {var(0) * var(0) + var(1) * var(1) - num(5)}};
  auto o = eliminate_and_decide(s);
  REQUIRE(o.status == SolveStatus::Solution);
  CHECK(satisfies(s, o.assignment));
  CHECK(o.method == "search");
  // x^2 + y^2 = 3 has no rational points; the search cannot prove that.
  PolySystem hard{Field(), {"x", "y"}, {var(0) * var(0) + var(1) * var(1) - num(3)}};
  SolverOptions small;
  small.search_height = 3;
  auto u = eliminate_and_decide(hard, small);
  CHECK(u.status == SolveStatus::Unknown);
  CHECK(u.reduced);
}
