#include "massey/dsl.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace massey {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Line {
  std::size_t number;
  std::string text;  // comment stripped, original columns kept
};

std::size_t first_non_space(const std::string& s, std::size_t from = 0) {
  while (from < s.size() && std::isspace(static_cast<unsigned char>(s[from]))) ++from;
  return from;
}

std::string trim_right(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

// Reads an identifier at `pos`; returns its end.
std::size_t read_ident(const Line& l, std::size_t pos, const char* what) {
  if (pos >= l.text.size() || !is_ident_start(l.text[pos]))
    throw ParseError(l.number, pos + 1, std::string("expected ") + what);
  std::size_t end = pos;
  while (end < l.text.size() && is_ident_char(l.text[end])) ++end;
  return end;
}

Rational parse_rational(const Line& l, std::size_t pos) {
  std::size_t end = l.text.size();
  std::string token = l.text.substr(pos, end - pos);
  std::size_t i = token[0] == '-' || token[0] == '+' ? 1 : 0;
  bool slash = false;
  bool digits = false;
  for (; i < token.size(); ++i) {
    char c = token[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      throw ParseError(l.number, pos + i + 1, "malformed rational '" + token + "'");
    }
  }
  if (!digits) throw ParseError(l.number, pos + 1, "malformed rational '" + token + "'");
  if (token[0] == '+') token.erase(0, 1);
  Rational q(token);
  if (q.get_den() == 0) throw ParseError(l.number, pos + 1, "zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

std::shared_ptr<const FreeCdga> parse_document(std::string_view text) {
  enum class Section { None, Field, Generators, Differential };
  Section section = Section::None;
  std::vector<Line> lines;
  {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string raw(text.substr(start, end - start));
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      lines.push_back({number, trim_right(raw)});
      start = end + 1;
    }
  }

  std::optional<Rational> theta;
  bool saw_base = false;
  std::vector<Generator> generators;
  std::set<std::string> names;
  std::vector<FreeCdga::DifferentialSpec> diffs;
  std::set<std::string> seen_sections;

  for (const auto& l : lines) {
    std::size_t p = first_non_space(l.text);
    if (p >= l.text.size()) continue;
    if (l.text[p] == '[') {
      auto close = l.text.find(']', p);
      if (close == std::string::npos) throw ParseError(l.number, p + 1, "unterminated section header");
      if (first_non_space(l.text, close + 1) != l.text.size())
        throw ParseError(l.number, close + 2, "unexpected text after section header");
      std::string name = l.text.substr(p + 1, close - p - 1);
      if (name == "field")
        section = Section::Field;
      else if (name == "generators")
        section = Section::Generators;
      else if (name == "differential")
        section = Section::Differential;
      else
        throw ParseError(l.number, p + 2, "unknown section '" + name + "'");
      if (!seen_sections.insert(name).second) throw ParseError(l.number, p + 1, "duplicate section [" + name + "]");
      continue;
    }
    switch (section) {
      case Section::None:
        throw ParseError(l.number, p + 1, "content before the first section");
      case Section::Field: {
        std::size_t end = read_ident(l, p, "a field key");
        std::string key = l.text.substr(p, end - p);
        std::size_t colon = first_non_space(l.text, end);
        if (colon >= l.text.size() || l.text[colon] != ':') throw ParseError(l.number, colon + 1, "expected ':'");
        std::size_t v = first_non_space(l.text, colon + 1);
        if (v >= l.text.size()) throw ParseError(l.number, v + 1, "missing value");
        if (key == "base") {
          if (l.text.substr(v) != "Q") throw ParseError(l.number, v + 1, "only base Q is supported");
          saw_base = true;
        } else if (key == "adjoin_sqrt") {
          theta = parse_rational(l, v);
          if (sgn(*theta) == 0 || is_square_in_rationals(*theta))
            throw ParseError(l.number, v + 1, "adjoin_sqrt needs a nonzero non-square rational");
        } else {
          throw ParseError(l.number, p + 1, "unknown field key '" + key + "'");
        }
        break;
      }
      case Section::Generators: {
        std::size_t end = read_ident(l, p, "a generator name");
        std::string name = l.text.substr(p, end - p);
        if (name == "s") throw ParseError(l.number, p + 1, "'s' is reserved for sqrt(theta)");
        if (!names.insert(name).second) throw ParseError(l.number, p + 1, "duplicate generator '" + name + "'");
        std::size_t colon = first_non_space(l.text, end);
        if (colon >= l.text.size() || l.text[colon] != ':') throw ParseError(l.number, colon + 1, "expected ':'");
        std::size_t v = first_non_space(l.text, colon + 1);
        std::size_t e = v;
        while (e < l.text.size() && std::isdigit(static_cast<unsigned char>(l.text[e]))) ++e;
        if (e == v || e != l.text.size()) throw ParseError(l.number, v + 1, "expected a positive integer degree");
        int degree = 0;
        try {
          degree = std::stoi(l.text.substr(v, e - v));
        } catch (const std::out_of_range&) {
          throw ParseError(l.number, v + 1, "degree out of range");
        }
        if (degree < 1) throw ParseError(l.number, v + 1, "generator degrees must be at least 1");
        generators.push_back({name, degree});
        break;
      }
      case Section::Differential: {
        std::size_t end = read_ident(l, p, "'d NAME = expression'");
        std::size_t name_start = p;
        if (l.text.substr(p, end - p) == "d") {
          std::size_t q = first_non_space(l.text, end);
          if (q < l.text.size() && is_ident_start(l.text[q])) {
            name_start = q;
            end = read_ident(l, q, "a generator name");
          }
        }
        std::string name = l.text.substr(name_start, end - name_start);
        if (!names.count(name)) throw ParseError(l.number, name_start + 1, "unknown generator '" + name + "'");
        std::size_t eq = first_non_space(l.text, end);
        if (eq >= l.text.size() || l.text[eq] != '=') throw ParseError(l.number, eq + 1, "expected '='");
        std::string expr = l.text.substr(eq + 1);
        diffs.push_back({name, parse_expression(expr, l.number, eq + 1), l.number});
        break;
      }
    }
  }
  (void)saw_base;
  Field field = theta ? Field::adjoin_sqrt(*theta) : Field::rationals();
  return FreeCdga::create(field, std::move(generators), std::move(diffs));
}

std::string serialize_document(const FreeCdga& alg) {
  std::ostringstream out;
  out << "[field]\nbase: Q\n";
  if (!alg.field().is_rationals()) out << "adjoin_sqrt: " << rational_to_string(alg.field().theta()) << "\n";
  out << "\n[generators]\n";
  for (const auto& g : alg.generators()) out << g.name << ": " << g.degree << "\n";
  out << "\n[differential]\n";
  for (std::size_t i = 0; i < alg.generators().size(); ++i) {
    const auto& dg = alg.generator_differential(i);
    if (!dg.is_zero()) out << "d " << alg.generators()[i].name << " = " << dg.to_string() << "\n";
  }
  return out.str();
}

}  // namespace massey
