#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "massey/field.hpp"

namespace massey {

/// Syntax error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// The message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/*
 * Algebraic expressions over generators:
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := unary ('*' unary)*
 *   unary   := '-' unary | power
 *   power   := primary ('^' INT)?
 *   primary := INT ('/' INT)? | 's' | IDENT | '(' expr ')'
 *
 * `s` is sqrt(theta) of the ambient field; identifiers name generators
 * (or other atoms of the algebra the expression is evaluated in).
 */
struct Expr {
  enum class Kind { Number, Sqrt, Atom, Add, Sub, Mul, Neg, Pow };
  Kind kind;
  Rational number;
  std::string name;
  unsigned exponent = 0;
  std::vector<std::unique_ptr<Expr>> children;
  std::size_t column = 0;
};

using ExprPtr = std::unique_ptr<Expr>;

/// `line` and `column_offset` only shift reported positions.
ExprPtr parse_expression(std::string_view text, std::size_t line = 1, std::size_t column_offset = 0);

/// Splits "[e1],[e2],..." into the bracketed expression texts.
std::vector<std::string> split_bracketed_list(std::string_view text);

/*
 * Folds an expression tree with an algebra-specific set of operations.
 * Ops must provide: Value scalar(FieldElement), Value atom(name, column),
 * add, sub, mul, neg, pow(Value, unsigned).
 */
template <class Ops>
typename Ops::Value evaluate(const Expr& e, Ops& ops, const Field& field) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number: return ops.scalar(FieldElement(e.number, 0, field));
    case K::Sqrt:
      if (field.is_rationals()) throw ParseError(1, e.column, "'s' requires a quadratic field");
      return ops.scalar(FieldElement::sqrt_theta(field));
    case K::Atom: return ops.atom(e.name, e.column);
    case K::Neg: return ops.neg(evaluate(*e.children[0], ops, field));
    case K::Pow: return ops.pow(evaluate(*e.children[0], ops, field), e.exponent);
    case K::Add:
      return ops.add(evaluate(*e.children[0], ops, field), evaluate(*e.children[1], ops, field));
    case K::Sub:
      return ops.sub(evaluate(*e.children[0], ops, field), evaluate(*e.children[1], ops, field));
    case K::Mul:
      return ops.mul(evaluate(*e.children[0], ops, field), evaluate(*e.children[1], ops, field));
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace massey
