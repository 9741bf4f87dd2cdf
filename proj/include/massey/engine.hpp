#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "massey/cochain.hpp"
#include "massey/cohomology.hpp"
#include "massey/polysolve.hpp"

namespace massey {

/// A defining-system equation fails, or shapes are inconsistent.
class InvalidDefiningSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A triple product asked for where z1 z2 or z2 z3 is nonzero.
class NotDefined : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Slot = std::pair<std::size_t, std::size_t>;  // 1-based (i, j), i <= j

/// Degree of a_{i,j} for input degrees degs[0..n-1]: sum |z_k| - (j - i).
int slot_degree(const std::vector<int>& degs, std::size_t i, std::size_t j);

/*
 * Entries a_{i,j} for 1 <= i <= j <= n, (i,j) != (1,n), subject to
 *   d a_{i,j} = sum_{k=i}^{j-1} (-1)^{|a_{i,k}|} a_{i,k} a_{k+1,j}.
 */
struct DefiningSystem {
  std::size_t n = 0;
  std::map<Slot, Cochain> entries;

  const Cochain& at(std::size_t i, std::size_t j) const { return entries.at({i, j}); }
  std::vector<int> degrees() const;
};

/// sum_{k=i}^{j-1} (-1)^{|a_{i,k}|} a_{i,k} a_{k+1,j}; `get(i, j)` returns entries.
template <class Coef, class Get>
HomogeneousVector<Coef> slot_rhs(const CochainAlgebra& alg, const std::vector<int>& degs, std::size_t i, std::size_t j,
                                 Get&& get) {
  auto out = zero_homogeneous<Coef>(alg, slot_degree(degs, i, j) + 1);
  for (std::size_t k = i; k < j; ++k) {
    auto term = multiply(alg, get(i, k), get(k + 1, j));
    out = out + scale(std::move(term), sign_of(slot_degree(degs, i, k)));
  }
  return out;
}

/// Throws InvalidDefiningSystem naming the first failing slot.
void validate(const CochainAlgebra& alg, const DefiningSystem& ds);
/// Validates, then returns the closed element sum_k (-1)^{|a_{1,k}|} a_{1,k} a_{k+1,n}.
Cochain massey_representative(const CochainAlgebra& alg, const DefiningSystem& ds);

struct ParameterInfo {
  enum class Kind { Image, Complement, Diagonal };
  std::string name;
  Slot slot;
  Kind kind = Kind::Image;
  /// Label of the basis element the parameter multiplies.
  std::string element;
};

std::string to_string(ParameterInfo::Kind kind);

struct GenericOptions {
  /// Add image-direction parameters to the diagonal representatives.
  bool vary_diagonal = false;
};

/*
 * The generic defining system: each slot is delta(rhs) plus a free
 * combination of the image and complement bases of its degree. The
 * C- and I-coordinates of every interior rhs form the well-definedness
 * system; adding those of the final representative gives the triviality
 * system.
 */
struct GenericDefiningSystem {
  std::size_t n = 0;
  std::vector<int> degrees;
  std::map<Slot, ParametricCochain> entries;
  ParametricCochain representative;
  std::vector<ParameterInfo> parameters;
  PolySystem well_defined;
  PolySystem trivial;
  std::vector<std::string> well_defined_labels;
  std::vector<std::string> trivial_labels;

  /// The concrete system at a full parameter assignment.
  DefiningSystem specialize(const std::vector<FieldElement>& assignment) const;
};

GenericDefiningSystem generic_defining_system(const CochainAlgebra& alg, const std::vector<CohomologyClass>& classes,
                                              const GenericOptions& options = {});

enum class Triviality { Yes, No, Unknown };
std::string to_string(Triviality t);

struct Obstruction {
  /// "well_defined" or "trivial": which system was refuted or left open.
  std::string system;
  SolveOutcome outcome;
};

struct MasseyOutcome {
  bool well_defined = false;
  /// False when the well-definedness system was left Unknown.
  bool well_defined_decided = true;
  Triviality trivial = Triviality::Unknown;
  Field field;
  /// Trivial = Yes: parameter values and the resulting defining system.
  std::optional<std::vector<FieldElement>> witness;
  std::optional<DefiningSystem> witness_system;
  /// Trivial = No / Unknown: the certificate or the residual system.
  std::optional<Obstruction> obstruction;
  GenericDefiningSystem generic;
  /// The algebra the decision was made in (scalars extended if needed).
  AlgebraPtr algebra;
};

struct DecideOptions {
  GenericOptions generic;
  SolverOptions solver = SolverOptions::from_environment();
};

/*
 * Decides well-definedness and triviality over `field`, which must extend
 * the algebra's field. Classes are given in the algebra's own cohomology
 * bases and embedded when the field is larger.
 */
MasseyOutcome decide(const AlgebraPtr& alg, const std::vector<CohomologyClass>& classes, const Field& field,
                     const DecideOptions& options = {});

struct IndeterminacySpace {
  int degree = 0;
  std::vector<CohomologyClass> basis;

  /// Whether a class of this degree lies in the span.
  bool contains(const CohomologyClass& x) const;
};

struct TripleValue {
  CohomologyClass value;
  IndeterminacySpace indeterminacy;
  bool trivial = false;
  DefiningSystem system;
};

/// One value of <z1, z2, z3> via delta-primitives, and z1 H + H z3.
TripleValue triple_value(const CochainAlgebra& alg, const CohomologyClass& z1, const CohomologyClass& z2,
                         const CohomologyClass& z3);

/// Basis of {z0 in H^degree : z1 z0 = 0, z0 z3 = 0}.
std::vector<CohomologyClass> annihilator_basis(const CochainAlgebra& alg, const CohomologyClass& z1,
                                               const CohomologyClass& z3, int degree);

/*
 * The class z0 * <z1, z2, z3>. Computed from two different defining
 * systems; a disagreement raises std::logic_error.
 */
CohomologyClass taylor_product(const CochainAlgebra& alg, const CohomologyClass& z0, const CohomologyClass& z1,
                               const CohomologyClass& z2, const CohomologyClass& z3);

}  // namespace massey
