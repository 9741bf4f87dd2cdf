#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace massey {

using Rational = mpq_class;

/// Raised when two scalars from incompatible quadratic fields meet.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/*
 * Handle to either Q or a quadratic extension Q(sqrt(theta)).
 *
 * Extensions are interned: two handles compare equal iff they were created
 * from the same theta. Q(sqrt(2)) and Q(sqrt(8)) are deliberately distinct
 * descriptors, since the textual token `s` means sqrt(theta) literally.
 */
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws std::invalid_argument if theta is zero or a rational square.
  static Field adjoin_sqrt(const Rational& theta);

  bool is_rationals() const { return theta_ == nullptr; }
  /// sqrt(theta)^2; throws std::logic_error on Q.
  const Rational& theta() const;

  /// True iff `base` embeds into *this (base is Q, or base == *this).
  bool extends(const Field& base) const { return base.is_rationals() || base == *this; }

  std::string to_string() const;

  friend bool operator==(const Field& x, const Field& y) { return x.theta_ == y.theta_; }
  friend bool operator!=(const Field& x, const Field& y) { return x.theta_ != y.theta_; }

 private:
  explicit Field(const Rational* theta) : theta_(theta) {}
  const Rational* theta_ = nullptr;
};

bool is_square_in_rationals(const Rational& q);
/// Exact square root in Q, if one exists.
std::optional<Rational> rational_sqrt(const Rational& q);

/*
 * a + b*sqrt(theta). Scalars carry their field; a scalar over Q combines
 * with a scalar of any extension (it is embedded on the fly), while two
 * different extensions raise FieldMismatch.
 */
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  FieldElement(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  FieldElement(Rational a, Rational b, Field field);

  static FieldElement zero(Field field) { return FieldElement(0, 0, field); }
  static FieldElement one(Field field) { return FieldElement(1, 0, field); }
  /// The generator sqrt(theta) of an extension.
  static FieldElement sqrt_theta(Field field);

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  const Field& field() const { return field_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  FieldElement conjugate() const;
  /// Field norm down to Q: a^2 - theta b^2.
  Rational norm() const;
  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& y);
  FieldElement& operator-=(const FieldElement& y);
  FieldElement& operator*=(const FieldElement& y);
  FieldElement& operator/=(const FieldElement& y);

  friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
  friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
  friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
  friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

  /// Forms `p/q`, `r/s*s`, `p/q + r/s*s`, `p/q - r/s*s`.
  std::string to_string() const;
  /// Inverse of to_string; the token `s` requires an extension field.
  static FieldElement parse(std::string_view text, Field field);

  /// Max of |numerator| and denominator over both parts.
  mpz_class height() const;

 private:
  void adopt_field(const Field& other);

  Rational a_;
  Rational b_;
  Field field_;
};

/// field_arith: single entry point mirroring the four operations.
enum class ArithOp { Add, Sub, Mul, Div };
FieldElement field_arith(const FieldElement& x, const FieldElement& y, ArithOp op);

/// Image of a scalar under the inclusion into `target`.
FieldElement embed(const FieldElement& x, const Field& target);

/// Exact square root inside x's field (or `field`, if x is rational), if any.
std::optional<FieldElement> sqrt_in_field(const FieldElement& x, const Field& field);

std::string rational_to_string(const Rational& q);

}  // namespace massey
