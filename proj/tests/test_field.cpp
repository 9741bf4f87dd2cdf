#include <catch_amalgamated.hpp>

#include <random>

#include "massey/field.hpp"
#include "support.hpp"

using namespace massey;

TEST_CASE("rationals: arithmetic is exact and canonical") {
  FieldElement a(Rational(1, 3)), b(Rational(1, 6));
  CHECK((a + b).to_string() == "1/2");
  CHECK((a - b) == FieldElement(Rational(1, 6)));
  CHECK((a / b) == FieldElement(2));
  CHECK(FieldElement(Rational(2, 4)).to_string() == "1/2");
  CHECK_THROWS_AS(FieldElement(0).inverse(), std::domain_error);
}

TEST_CASE("quadratic fields: s squares to theta") {
  Field f = Field::adjoin_sqrt(-1);
  auto s = FieldElement::sqrt_theta(f);
  CHECK(s * s == FieldElement(-1, 0, f));
  CHECK(s.to_string() == "s");
  CHECK((-s).to_string() == "-s");
  CHECK(FieldElement(Rational(1, 2), Rational(-3, 4), f).to_string() == "1/2 - 3/4*s");
  CHECK(FieldElement(3, 2, f).norm() == 13);
}

TEST_CASE("fields are interned by theta") {
  CHECK(Field::adjoin_sqrt(2) == Field::adjoin_sqrt(Rational(4, 2)));
  CHECK(Field::adjoin_sqrt(2) != Field::adjoin_sqrt(8));
  CHECK(Field::adjoin_sqrt(2).extends(Field::rationals()));
  CHECK_FALSE(Field::rationals().extends(Field::adjoin_sqrt(2)));
  CHECK_THROWS_AS(Field::adjoin_sqrt(4), std::invalid_argument);
  CHECK_THROWS_AS(Field::adjoin_sqrt(Rational(9, 16)), std::invalid_argument);
  CHECK_THROWS_AS(Field::adjoin_sqrt(0), std::invalid_argument);
}

TEST_CASE("mixing two extensions raises FieldMismatch") {
  auto i = FieldElement::sqrt_theta(Field::adjoin_sqrt(-1));
  auto r2 = FieldElement::sqrt_theta(Field::adjoin_sqrt(2));
  CHECK_THROWS_AS(i + r2, FieldMismatch);
  CHECK_NOTHROW(i + FieldElement(3));
  CHECK(field_arith(i, i, ArithOp::Mul) == FieldElement(-1, 0, Field::adjoin_sqrt(-1)));
}

TEST_CASE("parse inverts to_string") {
  std::mt19937 rng(11);
  for (Field f : {Field::rationals(), Field::adjoin_sqrt(-1), Field::adjoin_sqrt(Rational(3, 5))}) {
    for (int t = 0; t < 200; ++t) {
      auto x = support::random_scalar(rng, f, 30);
      CHECK(FieldElement::parse(x.to_string(), f) == x);
    }
  }
  CHECK_THROWS(FieldElement::parse("s", Field::rationals()));
  CHECK_THROWS(FieldElement::parse("1/0", Field::rationals()));
  CHECK_THROWS(FieldElement::parse("1 +", Field::rationals()));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(12);
  Field f = Field::adjoin_sqrt(5);
  for (int t = 0; t < 200; ++t) {
    auto x = support::random_scalar(rng, f), y = support::random_scalar(rng, f), z = support::random_scalar(rng, f);
    CHECK((x + y) * z == x * z + y * z);
    CHECK((x * y) * z == x * (y * z));
    if (!x.is_zero()) CHECK(x * x.inverse() == FieldElement::one(f));
    CHECK((x * x.conjugate()).is_rational());
    CHECK((x * x.conjugate()).rational_part() == x.norm());
  }
}

TEST_CASE("square roots inside the field") {
  Field f = Field::adjoin_sqrt(-1);
  auto r = sqrt_in_field(FieldElement(-4), f);
  REQUIRE(r);
  CHECK(*r * *r == FieldElement(-4, 0, f));
  CHECK_FALSE(sqrt_in_field(FieldElement(2), f));
  CHECK_FALSE(sqrt_in_field(FieldElement(-1), Field::rationals()));
  auto x = FieldElement(3, 4, f);  // (2 + s)^2
  auto rx = sqrt_in_field(x, f);
  REQUIRE(rx);
  CHECK(*rx * *rx == x);
  std::mt19937 rng(13);
  for (int t = 0; t < 100; ++t) {
    auto y = support::random_scalar(rng, f, 9);
    auto s = sqrt_in_field(y * y, f);
    REQUIRE(s);
    CHECK((*s == y || *s == -y));
  }
}
