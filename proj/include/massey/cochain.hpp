#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "massey/field.hpp"
#include "massey/linalg.hpp"
#include "massey/polynomial.hpp"

namespace massey {

/// Sparse coordinates: (basis index, coefficient), indices ascending, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, FieldElement>>;

/// A homogeneous element given by dense coordinates in the degree's basis.
template <class Coef>
struct HomogeneousVector {
  int degree = 0;
  std::vector<Coef> coords;

  bool is_zero() const {
    for (const auto& c : coords)
      if (!c.is_zero()) return false;
    return true;
  }
};

using Cochain = HomogeneousVector<FieldElement>;
using ParametricCochain = HomogeneousVector<Polynomial>;

struct Splitting;

/*
 * A cdga presented degree-wise: a finite basis in each degree, structure
 * constants for the product of basis elements, and the differential on
 * basis elements. Free graded-commutative algebras and explicit table
 * algebras (truncations, Poincare dualizations) both implement this, and
 * everything downstream (cohomology, Massey products) consumes only it.
 *
 * Implementations are immutable after construction. The per-degree
 * splitting cache lives here so that all consumers share it.
 */
class CochainAlgebra {
 public:
  virtual ~CochainAlgebra() = default;

  virtual const Field& field() const = 0;
  /// Highest degree with a nonzero piece; nullopt if unbounded.
  virtual std::optional<int> top_degree() const = 0;
  virtual std::size_t dimension(int degree) const = 0;
  virtual std::string basis_label(int degree, std::size_t index) const = 0;
  virtual SparseVector multiply_basis(int p, std::size_t i, int q, std::size_t j) const = 0;
  virtual SparseVector differential_basis(int p, std::size_t i) const = 0;
  /// Named elements usable in expressions (generators, `vol`, ...).
  virtual std::optional<Cochain> atom(std::string_view name) const = 0;
  virtual std::vector<std::string> atom_names() const = 0;
  /// The same algebra with scalars extended to `target`.
  virtual std::shared_ptr<const CochainAlgebra> extend_scalars(const Field& target) const = 0;
  /// Short description used in reports.
  virtual std::string describe() const = 0;

  Cochain unit() const;
  Cochain zero(int degree) const;
  Cochain basis_vector(int degree, std::size_t index) const;

  /// Cached splitting for a degree; see cohomology.hpp.
  std::shared_ptr<const Splitting> cached_splitting(int degree) const;
  void store_splitting(int degree, std::shared_ptr<const Splitting> s) const;

 private:
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::shared_ptr<const Splitting>> splittings_;
};

using AlgebraPtr = std::shared_ptr<const CochainAlgebra>;

template <class Coef>
HomogeneousVector<Coef> zero_homogeneous(const CochainAlgebra& alg, int degree) {
  HomogeneousVector<Coef> v;
  v.degree = degree;
  v.coords.assign(alg.dimension(degree), Coef(FieldElement::zero(alg.field())));
  return v;
}

/// Product of homogeneous elements using the algebra's structure constants.
template <class Coef>
HomogeneousVector<Coef> multiply(const CochainAlgebra& alg, const HomogeneousVector<Coef>& x,
                                 const HomogeneousVector<Coef>& y) {
  auto out = zero_homogeneous<Coef>(alg, x.degree + y.degree);
  if (out.coords.empty()) return out;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.coords.size(); ++j) {
      if (y.coords[j].is_zero()) continue;
      auto prod = alg.multiply_basis(x.degree, i, y.degree, j);
      if (prod.empty()) continue;
      Coef xy = x.coords[i] * y.coords[j];
      for (const auto& [k, c] : prod) out.coords[k] += xy * c;
    }
  }
  return out;
}

template <class Coef>
HomogeneousVector<Coef> differential(const CochainAlgebra& alg, const HomogeneousVector<Coef>& x) {
  auto out = zero_homogeneous<Coef>(alg, x.degree + 1);
  if (out.coords.empty()) return out;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i].is_zero()) continue;
    for (const auto& [k, c] : alg.differential_basis(x.degree, i)) out.coords[k] += x.coords[i] * c;
  }
  return out;
}

template <class Coef>
HomogeneousVector<Coef> operator+(HomogeneousVector<Coef> x, const HomogeneousVector<Coef>& y) {
  if (x.degree != y.degree && !y.is_zero() && !x.is_zero())
    throw std::invalid_argument("adding elements of different degrees");
  if (x.is_zero() && x.degree != y.degree) return y;
  if (y.is_zero()) return x;
  for (std::size_t i = 0; i < x.coords.size(); ++i) x.coords[i] += y.coords[i];
  return x;
}

template <class Coef>
HomogeneousVector<Coef> operator-(const HomogeneousVector<Coef>& x) {
  auto out = x;
  for (auto& c : out.coords) c = -c;
  return out;
}

template <class Coef>
HomogeneousVector<Coef> operator-(const HomogeneousVector<Coef>& x, const HomogeneousVector<Coef>& y) {
  return x + (-y);
}

template <class Coef>
HomogeneousVector<Coef> scale(HomogeneousVector<Coef> x, const FieldElement& c) {
  for (auto& e : x.coords) e = e * c;
  return x;
}

/// (-1)^k as a field element.
inline FieldElement sign_of(int k) { return (k % 2 == 0) ? FieldElement(1) : FieldElement(-1); }

inline bool operator==(const Cochain& x, const Cochain& y) {
  if (x.is_zero() && y.is_zero()) return true;
  return x.degree == y.degree && x.coords == y.coords;
}

ParametricCochain to_parametric(const Cochain& x);
Cochain specialize(const ParametricCochain& x, const std::vector<FieldElement>& assignment);
Cochain embed(const Cochain& x, const Field& target);

/// Human-readable linear combination of basis labels.
std::string to_string(const CochainAlgebra& alg, const Cochain& x);

/// Evaluates an expression to a homogeneous element (errors if mixed).
Cochain parse_cochain(const CochainAlgebra& alg, std::string_view text);

/// Structure checks on basis elements up to `max_degree`.
struct StructureReport {
  bool d_squared_zero = true;
  bool leibniz = true;
  bool graded_commutative = true;
  bool associative = true;
  std::vector<std::string> failures;
  bool ok() const { return d_squared_zero && leibniz && graded_commutative && associative; }
};
StructureReport check_structure(const CochainAlgebra& alg, int max_degree, bool check_associativity);

}  // namespace massey
