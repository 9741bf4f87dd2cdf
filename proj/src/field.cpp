#include "massey/field.hpp"

#include <cctype>
#include <deque>
#include <mutex>

namespace massey {

namespace {

// Interned thetas; deque keeps addresses stable.
struct ThetaRegistry {
  std::mutex mutex;
  std::deque<Rational> values;
};

ThetaRegistry& registry() {
  static ThetaRegistry r;
  return r;
}

}  // namespace

Field Field::adjoin_sqrt(const Rational& theta) {
  Rational t = theta;
  t.canonicalize();
  if (sgn(t) == 0) throw std::invalid_argument("cannot adjoin sqrt(0)");
  if (is_square_in_rationals(t))
    throw std::invalid_argument("theta = " + rational_to_string(t) + " is a square in Q");
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  for (const auto& v : reg.values)
    if (v == t) return Field(&v);
  reg.values.push_back(t);
  return Field(&reg.values.back());
}

const Rational& Field::theta() const {
  if (!theta_) throw std::logic_error("Q has no theta");
  return *theta_;
}

std::string Field::to_string() const {
  if (is_rationals()) return "Q";
  return "Q(sqrt(" + rational_to_string(*theta_) + "))";
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

bool is_square_in_rationals(const Rational& q) { return rational_sqrt(q).has_value(); }

FieldElement::FieldElement(Rational a, Rational b, Field field)
    : a_(std::move(a)), b_(std::move(b)), field_(field) {
  a_.canonicalize();
  b_.canonicalize();
  if (field_.is_rationals() && sgn(b_) != 0)
    throw std::invalid_argument("irrational part over Q");
}

FieldElement FieldElement::sqrt_theta(Field field) {
  if (field.is_rationals()) throw std::invalid_argument("sqrt(theta) requested over Q");
  return FieldElement(0, 1, field);
}

void FieldElement::adopt_field(const Field& other) {
  if (field_ == other || other.is_rationals()) return;
  if (field_.is_rationals()) {
    field_ = other;
    return;
  }
  throw FieldMismatch("scalars from " + field_.to_string() + " and " + other.to_string());
}

FieldElement& FieldElement::operator+=(const FieldElement& y) {
  adopt_field(y.field_);
  a_ += y.a_;
  if (sgn(y.b_) != 0) b_ += y.b_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& y) {
  adopt_field(y.field_);
  a_ -= y.a_;
  if (sgn(y.b_) != 0) b_ -= y.b_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& y) {
  adopt_field(y.field_);
  if (sgn(b_) == 0 && sgn(y.b_) == 0) {
    a_ *= y.a_;
    return *this;
  }
  // (a + b s)(c + d s) = (ac + bd theta) + (ad + bc) s
  const Rational& theta = field_.theta();
  Rational ac = a_ * y.a_;
  Rational bd = b_ * y.b_;
  Rational ad = a_ * y.b_;
  Rational bc = b_ * y.a_;
  a_ = ac + bd * theta;
  b_ = ad + bc;
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& y) { return *this *= y.inverse(); }

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

FieldElement FieldElement::conjugate() const {
  FieldElement r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational FieldElement::norm() const {
  if (sgn(b_) == 0) return a_ * a_;
  return a_ * a_ - field_.theta() * b_ * b_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (sgn(b_) == 0) return FieldElement(Rational(1) / a_, 0, field_);
  Rational n = norm();  // nonzero: theta is not a square
  return FieldElement(a_ / n, -b_ / n, field_);
}

mpz_class FieldElement::height() const {
  mpz_class h = abs(a_.get_num());
  auto bump = [&h](const mpz_class& v) {
    mpz_class av = abs(v);
    if (av > h) h = av;
  };
  bump(a_.get_den());
  if (sgn(b_) != 0) {
    bump(b_.get_num());
    bump(b_.get_den());
  }
  return h;
}

std::string FieldElement::to_string() const {
  if (sgn(b_) == 0) return rational_to_string(a_);
  // Unit multiples of s print as "s" / "-s".
  auto times_s = [](const Rational& b) { return b == 1 ? std::string("s") : rational_to_string(b) + "*s"; };
  if (sgn(a_) == 0) return sgn(b_) < 0 ? "-" + times_s(-b_) : times_s(b_);
  std::string irr = times_s(abs(b_));
  return rational_to_string(a_) + (sgn(b_) > 0 ? " + " : " - ") + irr;
}

namespace {

struct ScalarCursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool at_end() {
    skip_ws();
    return pos == text.size();
  }
  std::optional<mpz_class> integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) return std::nullopt;
    return mpz_class(std::string(text.substr(start, pos - start)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad scalar '" + std::string(text) + "': " + what);
  }
};

}  // namespace

FieldElement FieldElement::parse(std::string_view text, Field field) {
  ScalarCursor cur{text};
  bool parens = cur.eat('(');
  FieldElement total = FieldElement::zero(field);
  bool first = true;
  while (true) {
    int sign = 1;
    if (cur.eat('-')) {
      sign = -1;
    } else if (!first && !cur.eat('+')) {
      break;
    } else if (first) {
      cur.eat('+');
    }
    first = false;
    Rational coeff(1);
    bool have_number = false;
    if (auto num = cur.integer()) {
      have_number = true;
      coeff = Rational(*num);
      if (cur.eat('/')) {
        auto den = cur.integer();
        if (!den || sgn(*den) == 0) cur.fail("bad denominator");
        coeff = Rational(*num, *den);
        coeff.canonicalize();
      }
    }
    bool irrational = false;
    if (have_number && cur.eat('*')) {
      if (!cur.eat('s')) cur.fail("expected 's' after '*'");
      irrational = true;
    } else if (!have_number) {
      if (!cur.eat('s')) cur.fail("expected number or 's'");
      irrational = true;
    }
    if (sign < 0) coeff = -coeff;
    if (irrational) {
      if (field.is_rationals()) cur.fail("'s' used over Q");
      total += FieldElement(0, coeff, field);
    } else {
      total += FieldElement(coeff, 0, field);
    }
  }
  if (parens && !cur.eat(')')) cur.fail("missing ')'");
  if (!cur.at_end()) cur.fail("trailing characters");
  return total;
}

FieldElement field_arith(const FieldElement& x, const FieldElement& y, ArithOp op) {
  if (!x.field().is_rationals() && !y.field().is_rationals() && x.field() != y.field())
    throw FieldMismatch("descriptor mismatch: " + x.field().to_string() + " vs " +
                        y.field().to_string());
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
  }
  throw std::logic_error("unreachable");
}

FieldElement embed(const FieldElement& x, const Field& target) {
  if (x.field() == target) return x;
  if (!x.field().is_rationals())
    throw FieldMismatch("cannot embed " + x.field().to_string() + " into " + target.to_string());
  return FieldElement(x.rational_part(), 0, target);
}

std::optional<FieldElement> sqrt_in_field(const FieldElement& x, const Field& field_hint) {
  Field field = x.field().is_rationals() ? field_hint : x.field();
  const Rational& r = x.rational_part();
  const Rational& s = x.irrational_part();
  if (sgn(s) == 0) {
    if (auto q = rational_sqrt(r)) return FieldElement(*q, 0, field);
    if (field.is_rationals()) return std::nullopt;
    // r = theta q^2  =>  sqrt(r) = q sqrt(theta)
    if (auto q = rational_sqrt(r / field.theta())) return FieldElement(0, *q, field);
    return std::nullopt;
  }
  // (p + q s)^2 = p^2 + theta q^2 + 2pq s; p != 0 since s != 0.
  const Rational& theta = field.theta();
  auto n = rational_sqrt(r * r - theta * s * s);
  if (!n) return std::nullopt;
  for (int sign : {1, -1}) {
    Rational p2 = (r + sign * *n) / 2;
    auto p = rational_sqrt(p2);
    if (!p || sgn(*p) == 0) continue;
    Rational q = s / (2 * *p);
    FieldElement cand(*p, q, field);
    if (cand * cand == x) return cand;
  }
  return std::nullopt;
}

}  // namespace massey
