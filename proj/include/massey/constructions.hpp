#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "massey/cochain.hpp"
#include "massey/cohomology.hpp"
#include "massey/gca.hpp"
#include "massey/linalg.hpp"
#include "massey/table_algebra.hpp"

namespace massey {

/*
 * A degree-preserving linear map given degree-wise by matrices
 * (target basis x source basis) for degrees 0..max_degree+1. The extra
 * degree lets commutes_with_d() check d on the top degree.
 */
class DgaMorphism {
 public:
  static DgaMorphism from_matrices(AlgebraPtr source, AlgebraPtr target, std::map<int, Matrix> matrices, int max_degree);
  /// Multiplicative extension of generator images; `target` must be over a field extending the source's.
  static DgaMorphism from_generators(std::shared_ptr<const FreeCdga> source, AlgebraPtr target,
                                     const std::map<std::string, Cochain>& images, int max_degree);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  int max_degree() const { return max_degree_; }
  const Matrix& matrix(int degree) const { return matrices_.at(degree); }

  Cochain apply(const Cochain& x) const;
  bool commutes_with_d() const;
  /// f(e_i e_j) = f(e_i) f(e_j) for all basis pairs up to max_degree.
  bool is_multiplicative() const;
  /// H(f) in the cohomology bases: (dim H_target) x (dim H_source).
  Matrix on_cohomology(int degree) const;

 private:
  DgaMorphism() = default;
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::map<int, Matrix> matrices_;
  int max_degree_ = 0;
};

/// H^1(f) bijective and H^2(f) injective.
bool is_1_quasi_iso(const DgaMorphism& f);
/// Bijective in every degree up to max_degree, commutes with d, multiplicative.
bool check_isomorphism(const DgaMorphism& f);

struct Truncation {
  TableAlgebraPtr algebra;
  DgaMorphism quotient;
};

/// A / A^{>=n}: degrees below n, everything landing at or above n dropped.
Truncation truncate(const AlgebraPtr& alg, int n);

/// Base change; asserts that cohomology dimensions are unchanged up to `check_degree`.
AlgebraPtr extend_scalars(const AlgebraPtr& alg, const Field& field, int check_degree = 8);

/*
 * P_n A = A + D_n A with (D_n A)^k = (A^{n-k})^dual. In degree k the basis
 * is that of A^k followed by the duals of the A^{n-k} basis.
 */
struct DualizedAlgebra {
  TableAlgebraPtr algebra;
  AlgebraPtr base;
  int n = 0;
  /// The dual of 1, in degree n.
  Cochain volume;

  Cochain include(const Cochain& x) const;
  /// Index in P^k of the dual of basis element `index` of A^{n-k}.
  std::size_t dual_index(int k, std::size_t index) const;
};

/// Requires A connected, A^{>n} = 0 and H^{>=n}(A) = 0; throws std::invalid_argument otherwise.
DualizedAlgebra poincare_dualize(const AlgebraPtr& alg, int n);
/// The CLI default 2 * top + 1.
int default_dualization_degree(const CochainAlgebra& alg);

/// Coefficient of a degree-n class along the volume class.
FieldElement integrate(const DualizedAlgebra& p, const CohomologyClass& top);
/// Entries integrate(h_i h_j) for h_i in H^k, h_j in H^{n-k}.
Matrix pairing_matrix(const DualizedAlgebra& p, int k);

}  // namespace massey
