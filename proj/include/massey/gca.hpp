#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "massey/cochain.hpp"
#include "massey/expression.hpp"
#include "massey/field.hpp"

namespace massey {

struct Generator {
  std::string name;
  int degree = 1;
};

/// Exponent vector in the algebra's generator order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}

  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned operator[](std::size_t g) const { return g < exps_.size() ? exps_[g] : 0; }
  bool is_one() const;

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.exps_ == y.exps_; }

 private:
  std::vector<unsigned> exps_;
};

/// Lexicographically larger exponent vectors first: eta1 before eta2, x^2 before x*b.
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const { return x.exponents() > y.exponents(); }
};

class FreeCdga;

/// Polynomial in the generators; canonical (sorted, no zero terms).
class Element {
 public:
  using Terms = std::map<Monomial, FieldElement, MonomialOrder>;

  explicit Element(const FreeCdga* algebra) : algebra_(algebra) {}
  Element(const FreeCdga* algebra, Terms terms);

  const FreeCdga* algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree if nonzero and homogeneous.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  Element& operator+=(const Element& y);
  Element& operator-=(const Element& y);
  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator*(const Element& x, const Element& y);
  friend Element operator*(Element x, const FieldElement& c);
  Element operator-() const;

  friend bool operator==(const Element& x, const Element& y) { return x.terms_ == y.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const FieldElement& c);
  const FreeCdga* algebra_;
  Terms terms_;
};

Element multiply(const Element& x, const Element& y);
Element differential(const Element& x);

/*
 * Free graded-commutative algebra on positive-degree generators with a
 * derivation differential. Odd generators square to zero; even ones have
 * unbounded exponents. d is validated at construction (degrees, d^2 = 0).
 *
 * Instances are address-stable (Elements point back to their algebra), so
 * they are only created through create() and never copied or moved.
 */
class FreeCdga final : public CochainAlgebra {
 public:
  struct DifferentialSpec {
    std::string generator;
    ExprPtr expression;
    std::size_t line = 0;
  };

  static std::shared_ptr<const FreeCdga> create(Field field, std::vector<Generator> generators,
                                                std::vector<DifferentialSpec> differentials);

  FreeCdga(const FreeCdga&) = delete;
  FreeCdga& operator=(const FreeCdga&) = delete;

  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<std::size_t> generator_index(std::string_view name) const;
  Element generator(std::size_t index) const;
  Element generator(std::string_view name) const;
  /// d of a generator.
  const Element& generator_differential(std::size_t index) const { return diff_[index]; }
  Element constant(const FieldElement& c) const;
  Element element(std::string_view expression) const;

  int monomial_degree(const Monomial& m) const;
  /// Product of monomials with its Koszul sign; nullopt when it vanishes.
  std::optional<std::pair<Monomial, int>> multiply_monomials(const Monomial& x, const Monomial& y) const;

  /// All monomials of a degree in MonomialOrder; cached.
  const std::vector<Monomial>& graded_basis(int degree) const;
  std::optional<std::size_t> basis_index(const Monomial& m) const;
  std::string monomial_label(const Monomial& m) const;
  std::string element_to_string(const Element& x) const;

  Cochain to_cochain(const Element& x, std::optional<int> degree = std::nullopt) const;
  Element to_element(const Cochain& x) const;

  /// d(d(g)) == 0 for every generator.
  bool check_d_squared() const;

  // CochainAlgebra
  const Field& field() const override { return field_; }
  std::optional<int> top_degree() const override;
  std::size_t dimension(int degree) const override;
  std::string basis_label(int degree, std::size_t index) const override;
  SparseVector multiply_basis(int p, std::size_t i, int q, std::size_t j) const override;
  SparseVector differential_basis(int p, std::size_t i) const override;
  std::optional<Cochain> atom(std::string_view name) const override;
  std::vector<std::string> atom_names() const override;
  std::shared_ptr<const CochainAlgebra> extend_scalars(const Field& target) const override;
  std::string describe() const override;

  /// Same generators, differential coefficients embedded into `target`.
  std::shared_ptr<const FreeCdga> extended(const Field& target) const;

 private:
  struct Key {};

 public:
  FreeCdga(Key, Field field, std::vector<Generator> generators);

 private:
  struct DegreeBasis {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t, MonomialOrder> index;
  };
  const DegreeBasis& degree_basis(int degree) const;

  Field field_;
  std::vector<Generator> generators_;
  std::vector<Element> diff_;
  mutable std::mutex basis_mutex_;
  mutable std::map<int, DegreeBasis> bases_;
};

using FreeCdgaPtr = std::shared_ptr<const FreeCdga>;

}  // namespace massey
