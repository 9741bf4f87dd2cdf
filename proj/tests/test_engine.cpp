#include <catch_amalgamated.hpp>

#include <random>

#include "massey/corpus.hpp"
#include "massey/engine.hpp"
#include "support.hpp"

using namespace massey;

namespace {

CohomologyClass cls(const CochainAlgebra& a, const char* e) { return class_of(a, parse_cochain(a, e)); }

}  // namespace

TEST_CASE("slot degrees") {
  std::vector<int> degs{2, 3, 3, 2};
  CHECK(slot_degree(degs, 1, 1) == 2);
  CHECK(slot_degree(degs, 1, 2) == 4);
  CHECK(slot_degree(degs, 1, 3) == 6);
  CHECK(slot_degree(degs, 2, 4) == 6);
  CHECK(slot_degree(degs, 1, 4) == 7);
}

TEST_CASE("hand-built defining system for the Heisenberg triple") {
  auto h = build("heisenberg_squared");
  DefiningSystem ds;
  ds.n = 3;
  ds.entries[{1, 1}] = parse_cochain(*h, "x1");
  ds.entries[{2, 2}] = parse_cochain(*h, "x1");
  ds.entries[{3, 3}] = parse_cochain(*h, "x2");
  ds.entries[{1, 2}] = h->zero(1);
  // d a23 = (-1)^{|x1|} x1 x2 = -x1 x2 = d(-x3).
  ds.entries[{2, 3}] = parse_cochain(*h, "-x3");
  CHECK_NOTHROW(validate(*h, ds));
  auto rep = massey_representative(*h, ds);
  CHECK(rep == parse_cochain(*h, "x1*x3"));
  ds.entries[{2, 3}] = parse_cochain(*h, "x3");
  CHECK_THROWS_AS(validate(*h, ds), InvalidDefiningSystem);
}

TEST_CASE("generic system specializes to valid defining systems") {
  std::mt19937 rng(71);
  auto a = build("quadruple");
  auto g = generic_defining_system(*a, {cls(*a, "x"), cls(*a, "y"), cls(*a, "y"), cls(*a, "x")});
  CHECK(g.trivial.total_degree() <= 2);  // length 4: bounded by 2
  CHECK(g.trivial_labels.size() == g.trivial.equations.size());
  for (int t = 0; t < 20; ++t) {
    std::vector<FieldElement> at(g.parameters.size());
    for (auto& v : at) v = support::random_scalar(rng, a->field());
    // The interior equations here are identically zero, so every assignment is a defining system.
    REQUIRE(satisfies(g.well_defined, at));
    auto ds = g.specialize(at);
    CHECK_NOTHROW(validate(*a, ds));
    auto rep = massey_representative(*a, ds);
    auto cls_rep = class_of(*a, rep);
    bool zero_by_equations = satisfies(g.trivial, at);
    CHECK(cls_rep.is_zero() == zero_by_equations);
  }
}

TEST_CASE("decide: triples on the Heisenberg model") {
  auto h = build("heisenberg_squared");
  auto o = decide(h, {cls(*h, "x1"), cls(*h, "x1"), cls(*h, "x2")}, h->field());
  CHECK(o.well_defined);
  CHECK(o.trivial == Triviality::No);
  REQUIRE(o.obstruction);
  CHECK(replay(o.generic.trivial, *o.obstruction->outcome.refutation));
  auto y = decide(h, {cls(*h, "x1"), cls(*h, "x1"), cls(*h, "x1")}, h->field());
  CHECK(y.trivial == Triviality::Yes);
  CHECK(is_exact(*y.algebra, massey_representative(*y.algebra, *y.witness_system)));
}

TEST_CASE("decide: not well-defined") {
  auto h = build("heisenberg_squared");
  auto o = decide(h, {cls(*h, "x1"), cls(*h, "y1"), cls(*h, "x2")}, h->field());
  CHECK_FALSE(o.well_defined);
  CHECK(o.well_defined_decided);
  CHECK(o.trivial == Triviality::No);
  REQUIRE(o.obstruction);
  CHECK(o.obstruction->system == "well_defined");
  CHECK(replay(o.generic.well_defined, *o.obstruction->outcome.refutation));
  CHECK_THROWS_AS(triple_value(*h, cls(*h, "x1"), cls(*h, "y1"), cls(*h, "x2")), NotDefined);
}

TEST_CASE("varying the diagonal does not change the verdict") {
  auto h = build("iwasawa_real");
  DecideOptions opt;
  opt.generic.vary_diagonal = true;
  const std::vector<std::vector<const char*>> triples = {
      {"eta1", "eta3*eta4", "eta2"}, {"eta1", "eta1", "eta1"}, {"eta1*eta2", "eta1", "eta1"}};
  for (const auto& triple : triples) {
    std::vector<CohomologyClass> z;
    for (auto e : triple) z.push_back(cls(*h, e));
    auto plain = decide(h, z, h->field());
    auto varied = decide(h, z, h->field(), opt);
    CHECK(plain.trivial == varied.trivial);
  }
}

TEST_CASE("decide over an extension embeds the classes") {
  auto a = build("iwasawa_real");
  Field i = Field::adjoin_sqrt(-1);
  auto o = decide(a, {cls(*a, "eta1"), cls(*a, "eta3*eta4"), cls(*a, "eta2")}, i);
  CHECK(o.field == i);
  CHECK(o.algebra->field() == i);
  CHECK(o.trivial == Triviality::No);
  CHECK_THROWS_AS(decide(build("iwasawa_complex"), {}, Field::adjoin_sqrt(2)), std::invalid_argument);
}

TEST_CASE("triple value, indeterminacy and annihilators") {
  auto h = build("heisenberg_squared");
  auto z1 = cls(*h, "x1"), z3 = cls(*h, "x2");
  auto tv = triple_value(*h, z1, z1, z3);
  CHECK_FALSE(tv.trivial);
  CHECK(tv.value.degree == 2);
  for (const auto& b : tv.indeterminacy.basis) CHECK(tv.indeterminacy.contains(b));
  auto ann = annihilator_basis(*h, z1, z3, 1);
  for (const auto& t : ann) {
    CHECK(cup(*h, z1, t).is_zero());
    CHECK(cup(*h, t, z3).is_zero());
    CHECK_NOTHROW(taylor_product(*h, t, z1, z1, z3));
  }
  CHECK_THROWS_AS(taylor_product(*h, cls(*h, "y1"), z1, z1, z3), NotDefined);
}
