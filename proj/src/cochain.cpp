#include "massey/cochain.hpp"

#include <stdexcept>

#include "massey/expression.hpp"

namespace massey {

Cochain CochainAlgebra::zero(int degree) const { return zero_homogeneous<FieldElement>(*this, degree); }

Cochain CochainAlgebra::basis_vector(int degree, std::size_t index) const {
  auto v = zero(degree);
  v.coords.at(index) = FieldElement::one(field());
  return v;
}

Cochain CochainAlgebra::unit() const {
  if (dimension(0) == 0) throw std::logic_error("algebra has no degree-0 piece");
  return basis_vector(0, 0);
}

std::shared_ptr<const Splitting> CochainAlgebra::cached_splitting(int degree) const {
  std::lock_guard lock(cache_mutex_);
  auto it = splittings_.find(degree);
  return it == splittings_.end() ? nullptr : it->second;
}

void CochainAlgebra::store_splitting(int degree, std::shared_ptr<const Splitting> s) const {
  std::lock_guard lock(cache_mutex_);
  splittings_.try_emplace(degree, std::move(s));
}

ParametricCochain to_parametric(const Cochain& x) {
  ParametricCochain p;
  p.degree = x.degree;
  p.coords.reserve(x.coords.size());
  for (const auto& c : x.coords) p.coords.emplace_back(c);
  return p;
}

Cochain specialize(const ParametricCochain& x, const std::vector<FieldElement>& assignment) {
  Cochain c;
  c.degree = x.degree;
  c.coords.reserve(x.coords.size());
  for (const auto& p : x.coords) c.coords.push_back(p.evaluate(assignment));
  return c;
}

Cochain embed(const Cochain& x, const Field& target) {
  Cochain out;
  out.degree = x.degree;
  for (const auto& c : x.coords) out.coords.push_back(massey::embed(c, target));
  return out;
}

std::string to_string(const CochainAlgebra& alg, const Cochain& x) {
  std::string out;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    const auto& c = x.coords[i];
    if (c.is_zero()) continue;
    std::string label = alg.basis_label(x.degree, i);
    bool unit = (x.degree == 0 && label == "1");
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
  return out.empty() ? "0" : out;
}

namespace {

// Possibly inhomogeneous intermediate value: nonzero parts by degree.
struct Graded {
  std::map<int, Cochain> parts;
};

struct GradedOps {
  using Value = Graded;
  const CochainAlgebra& alg;

  static void put(Graded& g, Cochain c) {
    if (c.is_zero()) return;
    auto it = g.parts.find(c.degree);
    if (it == g.parts.end()) {
      g.parts.emplace(c.degree, std::move(c));
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) g.parts.erase(it);
  }

  Value scalar(const FieldElement& c) {
    Graded g;
    put(g, scale(alg.unit(), c));
    return g;
  }
  Value atom(const std::string& name, std::size_t column) {
    auto a = alg.atom(name);
    if (!a) throw ParseError(1, column, "unknown generator '" + name + "'");
    Graded g;
    put(g, *a);
    return g;
  }
  Value add(Value x, const Value& y) {
    for (const auto& [d, c] : y.parts) put(x, c);
    return x;
  }
  Value neg(Value x) {
    for (auto& [d, c] : x.parts) c = -c;
    return x;
  }
  Value sub(Value x, const Value& y) { return add(std::move(x), neg(y)); }
  Value mul(const Value& x, const Value& y) {
    Graded g;
    for (const auto& [dx, cx] : x.parts)
      for (const auto& [dy, cy] : y.parts) put(g, multiply(alg, cx, cy));
    return g;
  }
  Value pow(const Value& x, unsigned k) {
    Value acc = scalar(FieldElement::one(alg.field()));
    for (unsigned i = 0; i < k; ++i) acc = mul(acc, x);
    return acc;
  }
};

}  // namespace

Cochain parse_cochain(const CochainAlgebra& alg, std::string_view text) {
  auto expr = parse_expression(text);
  GradedOps ops{alg};
  Graded g = evaluate(*expr, ops, alg.field());
  if (g.parts.empty()) return alg.zero(0);
  if (g.parts.size() > 1) throw std::invalid_argument("expression '" + std::string(text) + "' is not homogeneous");
  return g.parts.begin()->second;
}

StructureReport check_structure(const CochainAlgebra& alg, int max_degree, bool check_associativity) {
  StructureReport rep;
  auto note = [&rep](bool& flag, std::string msg) {
    flag = false;
    if (rep.failures.size() < 20) rep.failures.push_back(std::move(msg));
  };
  for (int p = 0; p <= max_degree; ++p) {
    for (std::size_t i = 0; i < alg.dimension(p); ++i) {
      auto e = alg.basis_vector(p, i);
      if (!differential(alg, differential(alg, e)).is_zero())
        note(rep.d_squared_zero, "d^2 != 0 on " + alg.basis_label(p, i));
      for (int q = 0; p + q <= max_degree; ++q) {
        for (std::size_t j = 0; j < alg.dimension(q); ++j) {
          auto f = alg.basis_vector(q, j);
          auto ef = multiply(alg, e, f);
          auto fe = multiply(alg, f, e);
          if (!(ef == scale(fe, sign_of(p * q))))
            note(rep.graded_commutative, "commutativity fails for " + alg.basis_label(p, i) + ", " +
                                             alg.basis_label(q, j));
          if (p + q + 1 <= max_degree + 1) {
            auto lhs = differential(alg, ef);
            auto rhs = multiply(alg, differential(alg, e), f) +
                       scale(multiply(alg, e, differential(alg, f)), sign_of(p));
            if (!(lhs == rhs))
              note(rep.leibniz, "Leibniz fails for " + alg.basis_label(p, i) + ", " + alg.basis_label(q, j));
          }
          if (!check_associativity) continue;
          for (int r = 0; p + q + r <= max_degree; ++r) {
            for (std::size_t k = 0; k < alg.dimension(r); ++k) {
              auto g = alg.basis_vector(r, k);
              if (!(multiply(alg, ef, g) == multiply(alg, e, multiply(alg, f, g))))
                note(rep.associative, "associativity fails for " + alg.basis_label(p, i) + ", " +
                                          alg.basis_label(q, j) + ", " + alg.basis_label(r, k));
            }
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace massey
