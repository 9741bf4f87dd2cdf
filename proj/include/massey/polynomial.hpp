#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "massey/field.hpp"

namespace massey {

using VarId = std::uint32_t;

/// Power product of parameters, factors sorted by variable id.
class PowerProduct {
 public:
  PowerProduct() = default;
  static PowerProduct variable(VarId v, unsigned exponent = 1);

  const std::vector<std::pair<VarId, unsigned>>& factors() const { return factors_; }
  unsigned total_degree() const;
  unsigned degree_in(VarId v) const;
  bool is_one() const { return factors_.empty(); }

  PowerProduct operator*(const PowerProduct& other) const;
  /// This power product with variable v removed.
  PowerProduct without(VarId v) const;

  friend bool operator<(const PowerProduct& x, const PowerProduct& y) { return x.factors_ < y.factors_; }
  friend bool operator==(const PowerProduct& x, const PowerProduct& y) { return x.factors_ == y.factors_; }

 private:
  std::vector<std::pair<VarId, unsigned>> factors_;
};

/// Polynomial in the parameters with FieldElement coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(FieldElement c);  // NOLINT(google-explicit-constructor)
  static Polynomial variable(VarId v, Field field = Field());

  const std::map<PowerProduct, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldElement constant_term() const;
  FieldElement coefficient(const PowerProduct& m) const;
  unsigned total_degree() const;
  unsigned degree_in(VarId v) const;
  std::set<VarId> variables() const;

  Polynomial& operator+=(const Polynomial& y);
  Polynomial& operator-=(const Polynomial& y);
  Polynomial& operator*=(const FieldElement& c);
  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(Polynomial x, const FieldElement& c) { return x *= c; }
  friend Polynomial operator*(const FieldElement& c, Polynomial x) { return x *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.terms_ == y.terms_; }

  /// Replace variable v by the polynomial `value`.
  Polynomial substitute(VarId v, const Polynomial& value) const;
  /// Evaluate at a full assignment (indexed by VarId).
  FieldElement evaluate(const std::vector<FieldElement>& assignment) const;

  /// If v occurs only as c*v with constant c != 0, returns c.
  std::optional<FieldElement> linear_constant_coefficient(VarId v) const;
  /// Coefficients c0, c1, ... when this is univariate in v.
  std::vector<FieldElement> univariate_coefficients(VarId v) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const PowerProduct& m, const FieldElement& c);
  std::map<PowerProduct, FieldElement> terms_;
};

}  // namespace massey
