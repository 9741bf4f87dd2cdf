#pragma once

#include <optional>
#include <string>
#include <vector>

#include "massey/field.hpp"
#include "massey/polynomial.hpp"

namespace massey {

/// Polynomial equations (each "= 0") in named variables; VarId indexes `variables`.
struct PolySystem {
  Field field;
  std::vector<std::string> variables;
  std::vector<Polynomial> equations;

  unsigned total_degree() const;
  /// Throws std::invalid_argument if an equation uses an undeclared variable.
  void validate() const;
  std::string equation_string(std::size_t k) const { return equations.at(k).to_string(variables) + " = 0"; }
};

/// var := value, read off from equation `equation` = c * (var - value).
struct EliminationStep {
  std::size_t equation = 0;
  VarId variable = 0;
  Polynomial value;
};

/*
 * Proof that a system has no zero in its field. Equation indices refer to
 * the system after `steps` have been substituted (equations are never
 * reordered or dropped).
 *
 *   Inconsistent: sum multipliers[k] * equations[k] is a nonzero constant.
 *   NoRoot:       equations[equation] is univariate in `variable` of
 *                 degree <= 2 and has no root in the field.
 *   Branch:       equations[equation] = c * prod (variable - roots[k]);
 *                 children[k] refutes the system with variable := roots[k].
 */
struct Refutation {
  enum class Kind { Inconsistent, NoRoot, Branch };
  std::vector<EliminationStep> steps;
  Kind kind = Kind::Inconsistent;
  std::vector<FieldElement> multipliers;
  std::size_t equation = 0;
  VarId variable = 0;
  std::vector<FieldElement> roots;
  std::vector<Refutation> children;
};

enum class SolveStatus { Solution, NoSolution, Unknown };

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unknown;
  /// Solution: full assignment, indexed by VarId.
  std::vector<FieldElement> assignment;
  /// NoSolution: the certificate.
  std::optional<Refutation> refutation;
  /// Unknown: what remained after elimination.
  std::optional<PolySystem> reduced;
  /// solve_linear only: dimension of the solution space when nonempty.
  std::size_t solution_dimension = 0;
  /// "linear", "elimination" or "search".
  std::string method;
};

struct SolverOptions {
  /// Numerator/denominator bound of the witness search.
  unsigned search_height = 12;
  /// Maximum number of candidate tuples tried by the search.
  std::size_t search_budget = 200000;
  /// Defaults, with MASSEY_SEARCH_HEIGHT applied if set.
  static SolverOptions from_environment();
};

/// Exact Gaussian elimination; throws std::invalid_argument on nonlinear input.
SolveOutcome solve_linear(const PolySystem& system);

/// Substitution, univariate root decisions, then bounded search.
SolveOutcome eliminate_and_decide(const PolySystem& system, const SolverOptions& options = SolverOptions::from_environment());

/// Independent re-check of a refutation against the original system.
bool replay(const PolySystem& system, const Refutation& refutation);
/// True iff every equation vanishes at the assignment.
bool satisfies(const PolySystem& system, const std::vector<FieldElement>& assignment);

/// The system with the steps substituted (no checks).
PolySystem apply_steps(const PolySystem& system, const std::vector<EliminationStep>& steps);

/// Roots in `field` of c0 + c1 t + c2 t^2 (c2 or c1 nonzero), zero root first.
std::vector<FieldElement> roots_of_quadratic(const std::vector<FieldElement>& coeffs, const Field& field);

}  // namespace massey
