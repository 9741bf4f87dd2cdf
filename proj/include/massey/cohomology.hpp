#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "massey/cochain.hpp"
#include "massey/linalg.hpp"

namespace massey {

/// A homogeneous element whose I-component is nonzero.
class NotClosed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// primitive() of an element with a nonzero C- or I-component.
class NotExact : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/*
 * A^k = image(d) + C + I with bases u (image), v (closed, complementing the
 * image) and w (complementing the kernel). delta[i] is an element of
 * I^{k-1} with d(delta[i]) = u[i]. All vectors are coordinates in the
 * algebra's basis of the relevant degree.
 */
struct Splitting {
  int degree = 0;
  Field field;
  std::size_t dimension = 0;
  std::vector<Vector> basis_im;
  std::vector<Vector> basis_c;
  std::vector<Vector> basis_i;
  std::vector<Vector> delta;
  /// Sends basis coordinates to coefficients along (u..., v..., w...).
  Matrix to_split;

  Cochain im_element(std::size_t k) const { return {degree, basis_im.at(k)}; }
  Cochain c_element(std::size_t k) const { return {degree, basis_c.at(k)}; }
  Cochain i_element(std::size_t k) const { return {degree, basis_i.at(k)}; }
};

template <class Coef>
struct Decomposition {
  std::vector<Coef> im;
  std::vector<Coef> c;
  std::vector<Coef> i;
};

/// Deterministic pivot-based splitting of degree k; cached on the algebra.
std::shared_ptr<const Splitting> compute_splitting(const CochainAlgebra& alg, int degree);

struct CohomologyClass {
  int degree = 0;
  Vector coords;  ///< along basis_c of the degree

  bool is_zero() const { return massey::is_zero(coords); }
  friend bool operator==(const CohomologyClass& x, const CohomologyClass& y) {
    return x.degree == y.degree && x.coords == y.coords;
  }
};

std::size_t cohomology_dimension(const CochainAlgebra& alg, int degree);
/// Unit coordinate classes, i.e. the classes of basis_c.
std::vector<CohomologyClass> cohomology_basis(const CochainAlgebra& alg, int degree);
/// The canonical cocycle sum coords[k] * basis_c[k].
Cochain representative(const CochainAlgebra& alg, const CohomologyClass& cls);

/// Throws NotClosed when x has an I-component.
CohomologyClass class_of(const CochainAlgebra& alg, const Cochain& x);
bool is_closed(const CochainAlgebra& alg, const Cochain& x);
bool is_exact(const CochainAlgebra& alg, const Cochain& x);
/// delta(x) for exact x; throws NotExact otherwise.
Cochain primitive(const CochainAlgebra& alg, const Cochain& x);
CohomologyClass cup(const CochainAlgebra& alg, const CohomologyClass& x, const CohomologyClass& y);

template <class Coef>
Decomposition<Coef> decompose(const Splitting& s, const HomogeneousVector<Coef>& x) {
  if (x.degree != s.degree && !x.is_zero()) throw std::invalid_argument("decompose: degree mismatch");
  const std::size_t nu = s.basis_im.size();
  const std::size_t nc = s.basis_c.size();
  Decomposition<Coef> out;
  const Coef zero(FieldElement::zero(s.field));
  for (std::size_t r = 0; r < s.dimension; ++r) {
    Coef acc = zero;
    if (x.degree == s.degree)
      for (std::size_t k = 0; k < s.dimension; ++k)
        if (!s.to_split(r, k).is_zero() && !x.coords[k].is_zero()) acc += x.coords[k] * s.to_split(r, k);
    if (r < nu)
      out.im.push_back(std::move(acc));
    else if (r < nu + nc)
      out.c.push_back(std::move(acc));
    else
      out.i.push_back(std::move(acc));
  }
  return out;
}

/// sum_k coeffs[k] * delta[k], an element of degree s.degree - 1.
template <class Coef>
HomogeneousVector<Coef> apply_delta(const CochainAlgebra& alg, const Splitting& s, const std::vector<Coef>& coeffs) {
  auto out = zero_homogeneous<Coef>(alg, s.degree - 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (std::size_t j = 0; j < out.coords.size(); ++j)
      if (!s.delta[k][j].is_zero()) out.coords[j] += coeffs[k] * s.delta[k][j];
  }
  return out;
}

}  // namespace massey
