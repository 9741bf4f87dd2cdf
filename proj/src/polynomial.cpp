#include "massey/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace massey {

PowerProduct PowerProduct::variable(VarId v, unsigned exponent) {
  PowerProduct p;
  if (exponent > 0) p.factors_.emplace_back(v, exponent);
  return p;
}

unsigned PowerProduct::total_degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

unsigned PowerProduct::degree_in(VarId v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

PowerProduct PowerProduct::operator*(const PowerProduct& other) const {
  PowerProduct out;
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

PowerProduct PowerProduct::without(VarId v) const {
  PowerProduct out;
  for (const auto& f : factors_)
    if (f.first != v) out.factors_.push_back(f);
  return out;
}

Polynomial::Polynomial(FieldElement c) {
  if (!c.is_zero()) terms_.emplace(PowerProduct(), std::move(c));
}

Polynomial Polynomial::variable(VarId v, Field field) {
  Polynomial p;
  p.terms_.emplace(PowerProduct::variable(v), FieldElement::one(field));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

FieldElement Polynomial::constant_term() const { return coefficient(PowerProduct()); }

FieldElement Polynomial::coefficient(const PowerProduct& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement() : it->second;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

unsigned Polynomial::degree_in(VarId v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
  return d;
}

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) vs.insert(v);
  return vs;
}

void Polynomial::add_term(const PowerProduct& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& y) {
  for (const auto& [m, c] : y.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& y) {
  for (const auto& [m, c] : y.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  Polynomial out;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) out.add_term(mx * my, cx * cy);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::substitute(VarId v, const Polynomial& value) const {
  Polynomial out;
  std::vector<Polynomial> powers{Polynomial(FieldElement(1))};
  for (const auto& [m, c] : terms_) {
    unsigned e = m.degree_in(v);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Polynomial rest;
    rest.terms_.emplace(m.without(v), c);
    out += rest * powers[e];
  }
  return out;
}

FieldElement Polynomial::evaluate(const std::vector<FieldElement>& assignment) const {
  FieldElement total;
  for (const auto& [m, c] : terms_) {
    FieldElement t = c;
    for (const auto& [v, e] : m.factors()) {
      if (v >= assignment.size()) throw std::out_of_range("unassigned variable");
      for (unsigned k = 0; k < e; ++k) t *= assignment[v];
    }
    total += t;
  }
  return total;
}

std::optional<FieldElement> Polynomial::linear_constant_coefficient(VarId v) const {
  std::optional<FieldElement> coeff;
  for (const auto& [m, c] : terms_) {
    unsigned e = m.degree_in(v);
    if (e == 0) continue;
    if (e != 1 || m.factors().size() != 1) return std::nullopt;
    coeff = c;
  }
  return coeff;
}

std::vector<FieldElement> Polynomial::univariate_coefficients(VarId v) const {
  std::vector<FieldElement> out(degree_in(v) + 1);
  for (const auto& [m, c] : terms_) {
    if (m.factors().size() > 1 || (m.factors().size() == 1 && m.factors()[0].first != v))
      throw std::invalid_argument("polynomial is not univariate in the requested variable");
    out[m.degree_in(v)] += c;
  }
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  // Highest total degree first, constant last.
  std::vector<std::pair<const PowerProduct*, const FieldElement*>> order;
  for (const auto& [m, c] : terms_) order.emplace_back(&m, &c);
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.first->total_degree() != y.first->total_degree()) return x.first->total_degree() > y.first->total_degree();
    // Within a degree, graded lex: x^2 before x*y before y^2.
    const auto& fx = x.first->factors();
    const auto& fy = y.first->factors();
    for (std::size_t k = 0; k < fx.size() && k < fy.size(); ++k) {
      if (fx[k].first != fy[k].first) return fx[k].first < fy[k].first;
      if (fx[k].second != fy[k].second) return fx[k].second > fy[k].second;
    }
    return fx.size() > fy.size();
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : order) {
    std::string mono;
    for (const auto& [v, e] : m->factors()) {
      if (!mono.empty()) mono += "*";
      mono += v < names.size() ? names[v] : "t" + std::to_string(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string coeff;
    bool negative = false;
    if (c->is_rational()) {
      Rational a = c->rational_part();
      negative = sgn(a) < 0;
      if (negative) a = -a;
      if (!(a == 1) || mono.empty()) coeff = rational_to_string(a);
    } else {
      coeff = "(" + c->to_string() + ")";
    }
    std::string term = coeff;
    if (!mono.empty()) term = coeff.empty() ? mono : coeff + "*" + mono;
    if (first) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
    first = false;
  }
  return out;
}

}  // namespace massey
