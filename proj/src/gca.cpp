#include "massey/gca.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace massey {

bool Monomial::is_one() const {
  for (auto e : exps_)
    if (e != 0) return false;
  return true;
}

Element::Element(const FreeCdga* algebra, Terms terms) : algebra_(algebra) {
  for (auto& [m, c] : terms)
    if (!c.is_zero()) terms_.emplace(m, c);
}

std::optional<int> Element::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = algebra_->monomial_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (algebra_->monomial_degree(m) != d) return std::nullopt;
  return d;
}

bool Element::is_homogeneous() const { return is_zero() || degree().has_value(); }

void Element::add_term(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {
void require_same_algebra(const Element& x, const Element& y) {
  if (x.algebra() != y.algebra()) throw std::invalid_argument("elements from different algebras");
}
}  // namespace

Element& Element::operator+=(const Element& y) {
  require_same_algebra(*this, y);
  for (const auto& [m, c] : y.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& y) {
  require_same_algebra(*this, y);
  for (const auto& [m, c] : y.terms_) add_term(m, -c);
  return *this;
}

Element operator*(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  Element out(x.algebra_);
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) {
      auto prod = x.algebra_->multiply_monomials(mx, my);
      if (!prod) continue;
      FieldElement c = cx * cy;
      if (prod->second < 0) c = -c;
      out.add_term(prod->first, c);
    }
  return out;
}

Element operator*(Element x, const FieldElement& c) {
  if (c.is_zero()) return Element(x.algebra_);
  for (auto& [m, v] : x.terms_) v *= c;
  return x;
}

Element Element::operator-() const { return *this * FieldElement(-1); }

std::string Element::to_string() const {
  return algebra_->element_to_string(*this);
}

Element multiply(const Element& x, const Element& y) { return x * y; }

Element differential(const Element& x) {
  const FreeCdga* alg = x.algebra();
  Element out(alg);
  const auto& gens = alg->generators();
  for (const auto& [m, c] : x.terms()) {
    // d(g1^e1 ... gk^ek) = sum_i (-1)^{|prefix|} prefix * d(gi^ei) * suffix
    for (std::size_t i = 0; i < gens.size(); ++i) {
      unsigned e = m[i];
      if (e == 0) continue;
      const Element& dg = alg->generator_differential(i);
      if (dg.is_zero()) continue;
      std::vector<unsigned> pre(gens.size(), 0), post(gens.size(), 0), mid(gens.size(), 0);
      int prefix_degree = 0;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (j < i) {
          pre[j] = m[j];
          prefix_degree += static_cast<int>(m[j]) * gens[j].degree;
        } else if (j > i) {
          post[j] = m[j];
        }
      }
      mid[i] = e - 1;
      FieldElement coeff = c * FieldElement(static_cast<long>(e));  // e > 1 only for even gi
      if (prefix_degree % 2 != 0) coeff = -coeff;
      Element prefix(alg, {{Monomial(pre), FieldElement::one(alg->field())}});
      Element power(alg, {{Monomial(mid), FieldElement::one(alg->field())}});
      Element suffix(alg, {{Monomial(post), FieldElement::one(alg->field())}});
      out += prefix * (dg * power) * suffix * coeff;
    }
  }
  return out;
}

FreeCdga::FreeCdga(Key, Field field, std::vector<Generator> generators)
    : field_(field), generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.degree < 1) throw std::invalid_argument("generator '" + g.name + "' must have degree >= 1");
    if (g.name.empty() || !(std::isalpha(static_cast<unsigned char>(g.name[0])) || g.name[0] == '_'))
      throw std::invalid_argument("invalid generator name '" + g.name + "'");
    if (g.name == "s") throw std::invalid_argument("'s' is reserved for sqrt(theta)");
    if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator '" + g.name + "'");
  }
  diff_.assign(generators_.size(), Element(this));
}

namespace {

struct ElementOps {
  using Value = Element;
  const FreeCdga& alg;
  Value scalar(const FieldElement& c) { return alg.constant(c); }
  Value atom(const std::string& name, std::size_t column) {
    auto idx = alg.generator_index(name);
    if (!idx) throw ParseError(1, column, "unknown generator '" + name + "'");
    return alg.generator(*idx);
  }
  Value add(Value x, const Value& y) { return x + y; }
  Value sub(Value x, const Value& y) { return x - y; }
  Value mul(const Value& x, const Value& y) { return x * y; }
  Value neg(const Value& x) { return -x; }
  Value pow(const Value& x, unsigned k) {
    Value acc = alg.constant(FieldElement::one(alg.field()));
    for (unsigned i = 0; i < k; ++i) acc = acc * x;
    return acc;
  }
};

[[noreturn]] void definition_error(std::size_t line, const std::string& msg) {
  if (line > 0) throw ParseError(line, 1, msg);
  throw std::invalid_argument(msg);
}

}  // namespace

FreeCdgaPtr FreeCdga::create(Field field, std::vector<Generator> generators,
                             std::vector<DifferentialSpec> differentials) {
  auto alg = std::make_shared<FreeCdga>(Key{}, field, std::move(generators));
  std::vector<std::size_t> lines(alg->generators_.size(), 0);
  std::vector<bool> assigned(alg->generators_.size(), false);
  for (auto& spec : differentials) {
    auto idx = alg->generator_index(spec.generator);
    if (!idx) definition_error(spec.line, "differential of unknown generator '" + spec.generator + "'");
    if (assigned[*idx]) definition_error(spec.line, "differential of '" + spec.generator + "' given twice");
    ElementOps ops{*alg};
    Element value(alg.get());
    try {
      value = evaluate(*spec.expression, ops, field);
    } catch (const ParseError& e) {
      if (spec.line > 0) throw ParseError(spec.line, e.column(), e.message());
      throw;
    }
    int want = alg->generators_[*idx].degree + 1;
    if (!value.is_zero()) {
      auto deg = value.degree();
      if (!deg) definition_error(spec.line, "d " + spec.generator + " is not homogeneous");
      if (*deg != want)
        definition_error(spec.line, "degree mismatch: d " + spec.generator + " must have degree " +
                                        std::to_string(want) + ", got " + std::to_string(*deg));
    }
    alg->diff_[*idx] = std::move(value);
    assigned[*idx] = true;
    lines[*idx] = spec.line;
  }
  for (std::size_t i = 0; i < alg->generators_.size(); ++i) {
    if (!differential(alg->diff_[i]).is_zero())
      definition_error(lines[i], "d^2 != 0 on generator '" + alg->generators_[i].name + "'");
  }
  return alg;
}

std::optional<std::size_t> FreeCdga::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

Element FreeCdga::generator(std::size_t index) const {
  std::vector<unsigned> e(generators_.size(), 0);
  e.at(index) = 1;
  return Element(this, {{Monomial(std::move(e)), FieldElement::one(field_)}});
}

Element FreeCdga::generator(std::string_view name) const {
  auto idx = generator_index(name);
  if (!idx) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return generator(*idx);
}

Element FreeCdga::constant(const FieldElement& c) const {
  return Element(this, {{Monomial(std::vector<unsigned>(generators_.size(), 0)), c}});
}

Element FreeCdga::element(std::string_view expression) const {
  auto e = parse_expression(expression);
  ElementOps ops{*this};
  return evaluate(*e, ops, field_);
}

int FreeCdga::monomial_degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t g = 0; g < generators_.size(); ++g) d += static_cast<int>(m[g]) * generators_[g].degree;
  return d;
}

std::optional<std::pair<Monomial, int>> FreeCdga::multiply_monomials(const Monomial& x, const Monomial& y) const {
  const std::size_t n = generators_.size();
  std::vector<unsigned> e(n, 0);
  int swaps = 0;
  int odd_in_x_above = 0;  // odd generators of x with index > g, scanning g downwards
  for (std::size_t k = n; k-- > 0;) {
    bool odd = generators_[k].degree % 2 != 0;
    if (odd && x[k] > 0 && y[k] > 0) return std::nullopt;
    e[k] = x[k] + y[k];
    if (odd && y[k] > 0) swaps += odd_in_x_above;
    if (odd && x[k] > 0) ++odd_in_x_above;
  }
  return std::make_pair(Monomial(std::move(e)), swaps % 2 == 0 ? 1 : -1);
}

const FreeCdga::DegreeBasis& FreeCdga::degree_basis(int degree) const {
  std::lock_guard lock(basis_mutex_);
  auto it = bases_.find(degree);
  if (it != bases_.end()) return it->second;
  DegreeBasis basis;
  if (degree >= 0) {
    std::vector<unsigned> exps(generators_.size(), 0);
    // Highest exponent of each generator first gives MonomialOrder directly.
    auto rec = [&](auto&& self, std::size_t g, int remaining) -> void {
      if (g == generators_.size()) {
        if (remaining == 0) basis.monomials.emplace_back(exps);
        return;
      }
      int deg = generators_[g].degree;
      int max_e = remaining / deg;
      if (deg % 2 != 0 && max_e > 1) max_e = 1;
      for (int e = max_e; e >= 0; --e) {
        exps[g] = static_cast<unsigned>(e);
        self(self, g + 1, remaining - e * deg);
      }
      exps[g] = 0;
    };
    rec(rec, 0, degree);
  }
  for (std::size_t i = 0; i < basis.monomials.size(); ++i) basis.index.emplace(basis.monomials[i], i);
  return bases_.emplace(degree, std::move(basis)).first->second;
}

const std::vector<Monomial>& FreeCdga::graded_basis(int degree) const { return degree_basis(degree).monomials; }

std::optional<std::size_t> FreeCdga::basis_index(const Monomial& m) const {
  const auto& b = degree_basis(monomial_degree(m));
  auto it = b.index.find(m);
  if (it == b.index.end()) return std::nullopt;
  return it->second;
}

std::string FreeCdga::monomial_label(const Monomial& m) const {
  std::string out;
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (m[g] == 0) continue;
    if (!out.empty()) out += "*";
    out += generators_[g].name;
    if (m[g] > 1) out += "^" + std::to_string(m[g]);
  }
  return out.empty() ? "1" : out;
}

std::string FreeCdga::element_to_string(const Element& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : x.terms()) {
    std::string label = monomial_label(m);
    bool unit = m.is_one();
    bool negative = false;
    std::string coeff;
    if (c.is_rational()) {
      Rational a = c.rational_part();
      negative = sgn(a) < 0;
      if (negative) a = -a;
      if (!(a == 1) || unit) coeff = rational_to_string(a);
    } else if (sgn(c.rational_part()) == 0) {
      Rational b = c.irrational_part();
      negative = sgn(b) < 0;
      if (negative) b = -b;
      coeff = b == 1 ? "s" : rational_to_string(b) + "*s";
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    std::string term = unit ? coeff : (coeff.empty() ? label : coeff + "*" + label);
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

Cochain FreeCdga::to_cochain(const Element& x, std::optional<int> degree) const {
  if (x.algebra() != this) throw std::invalid_argument("element from a different algebra");
  int deg = 0;
  if (x.is_zero()) {
    deg = degree.value_or(0);
  } else {
    auto d = x.degree();
    if (!d) throw std::invalid_argument("element is not homogeneous");
    if (degree && *degree != *d) throw std::invalid_argument("element has unexpected degree");
    deg = *d;
  }
  Cochain c = zero(deg);
  for (const auto& [m, v] : x.terms()) c.coords[*basis_index(m)] = v;
  return c;
}

Element FreeCdga::to_element(const Cochain& x) const {
  const auto& basis = graded_basis(x.degree);
  Element::Terms terms;
  for (std::size_t i = 0; i < x.coords.size(); ++i)
    if (!x.coords[i].is_zero()) terms.emplace(basis[i], x.coords[i]);
  return Element(this, std::move(terms));
}

bool FreeCdga::check_d_squared() const {
  for (const auto& dg : diff_)
    if (!differential(dg).is_zero()) return false;
  return true;
}

std::optional<int> FreeCdga::top_degree() const {
  int top = 0;
  for (const auto& g : generators_) {
    if (g.degree % 2 == 0) return std::nullopt;
    top += g.degree;
  }
  return top;
}

std::size_t FreeCdga::dimension(int degree) const { return graded_basis(degree).size(); }

std::string FreeCdga::basis_label(int degree, std::size_t index) const {
  return monomial_label(graded_basis(degree).at(index));
}

SparseVector FreeCdga::multiply_basis(int p, std::size_t i, int q, std::size_t j) const {
  const auto& x = graded_basis(p).at(i);
  const auto& y = graded_basis(q).at(j);
  auto prod = multiply_monomials(x, y);
  if (!prod) return {};
  auto idx = basis_index(prod->first);
  return {{*idx, FieldElement(prod->second)}};
}

SparseVector FreeCdga::differential_basis(int p, std::size_t i) const {
  const auto& m = graded_basis(p).at(i);
  Element dm = differential(Element(this, {{m, FieldElement::one(field_)}}));
  SparseVector out;
  for (const auto& [mono, c] : dm.terms()) out.emplace_back(*basis_index(mono), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::optional<Cochain> FreeCdga::atom(std::string_view name) const {
  auto idx = generator_index(name);
  if (!idx) return std::nullopt;
  return to_cochain(generator(*idx));
}

std::vector<std::string> FreeCdga::atom_names() const {
  std::vector<std::string> names;
  for (const auto& g : generators_) names.push_back(g.name);
  return names;
}

FreeCdgaPtr FreeCdga::extended(const Field& target) const {
  if (!target.extends(field_))
    throw FieldMismatch("cannot extend " + field_.to_string() + " to " + target.to_string());
  auto alg = std::make_shared<FreeCdga>(Key{}, target, generators_);
  for (std::size_t i = 0; i < diff_.size(); ++i) {
    Element::Terms terms;
    for (const auto& [m, c] : diff_[i].terms()) terms.emplace(m, massey::embed(c, target));
    alg->diff_[i] = Element(alg.get(), std::move(terms));
  }
  return alg;
}

std::shared_ptr<const CochainAlgebra> FreeCdga::extend_scalars(const Field& target) const { return extended(target); }

std::string FreeCdga::describe() const {
  std::string out = "free cdga over " + field_.to_string() + " on";
  for (const auto& g : generators_) out += " " + g.name + ":" + std::to_string(g.degree);
  return out;
}

}  // namespace massey
