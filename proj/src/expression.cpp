#include "massey/expression.hpp"

#include <cctype>

namespace massey {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t line, std::size_t offset)
      : text_(text), line_(line), offset_(offset) {}

  ExprPtr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, offset_ + pos_ + 1, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  ExprPtr make(Expr::Kind kind, std::size_t col) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->column = offset_ + col + 1;
    return e;
  }

  ExprPtr binary(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs, std::size_t col) {
    auto e = make(kind, col);
    e->children.push_back(std::move(lhs));
    e->children.push_back(std::move(rhs));
    return e;
  }

  ExprPtr expr() {
    auto lhs = term();
    while (true) {
      skip_ws();
      std::size_t col = pos_;
      if (eat('+')) {
        lhs = binary(Expr::Kind::Add, std::move(lhs), term(), col);
      } else if (eat('-')) {
        lhs = binary(Expr::Kind::Sub, std::move(lhs), term(), col);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    auto lhs = unary();
    while (true) {
      skip_ws();
      std::size_t col = pos_;
      if (!eat('*')) return lhs;
      lhs = binary(Expr::Kind::Mul, std::move(lhs), unary(), col);
    }
  }

  ExprPtr unary() {
    skip_ws();
    std::size_t col = pos_;
    if (eat('-')) {
      auto e = make(Expr::Kind::Neg, col);
      e->children.push_back(unary());
      return e;
    }
    return power();
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprPtr power() {
    auto base = primary();
    skip_ws();
    std::size_t col = pos_;
    if (!eat('^')) return base;
    auto d = digits();
    if (d.empty()) fail("expected exponent after '^'");
    auto e = make(Expr::Kind::Pow, col);
    e->exponent = static_cast<unsigned>(std::stoul(d));
    e->children.push_back(std::move(base));
    return e;
  }

  ExprPtr primary() {
    skip_ws();
    std::size_t col = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto num = digits();
      Rational q{mpz_class(num)};
      if (eat('/')) {
        auto den = digits();
        if (den.empty()) fail("expected denominator");
        mpz_class d(den);
        if (sgn(d) == 0) fail("zero denominator");
        q = Rational(mpz_class(num), d);
        q.canonicalize();
      }
      auto e = make(Expr::Kind::Number, col);
      e->number = q;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string ident(text_.substr(start, pos_ - start));
      if (ident == "s") return make(Expr::Kind::Sqrt, col);
      auto e = make(Expr::Kind::Atom, col);
      e->name = std::move(ident);
      return e;
    }
    if (eat('(')) {
      auto inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text, std::size_t line, std::size_t column_offset) {
  return Parser(text, line, column_offset).parse();
}

std::vector<std::string> split_bracketed_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '[') throw ParseError(1, i + 1, "expected '['");
    int depth = 0;
    std::size_t start = i + 1;
    for (; i < text.size(); ++i) {
      if (text[i] == '[') ++depth;
      if (text[i] == ']' && --depth == 0) break;
    }
    if (i >= text.size()) throw ParseError(1, start, "unterminated '['");
    out.emplace_back(text.substr(start, i - start));
    ++i;
    skip();
    if (i < text.size()) {
      if (text[i] != ',') throw ParseError(1, i + 1, "expected ','");
      ++i;
      skip();
    }
  }
  return out;
}

}  // namespace massey
