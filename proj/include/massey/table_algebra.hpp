#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "massey/cochain.hpp"

namespace massey {

/// Raw structure constants of a finite-dimensional cdga, degrees 0..top.
struct TableData {
  Field field;
  std::string description;
  std::vector<std::vector<std::string>> labels;
  /// differential[p][i] = d(e_i) in degree p+1.
  std::vector<std::vector<SparseVector>> differential;
  /// products[{p,q}][i * dim(q) + j] = e_i e_j; missing pairs are zero.
  std::map<std::pair<int, int>, std::vector<SparseVector>> products;
  std::vector<std::pair<std::string, Cochain>> atoms;
};

/*
 * A cdga given by explicit multiplication and differential tables.
 * Basis element 0 of degree 0 must be the unit. Nothing beyond the
 * declared degrees exists: products and differentials landing above the
 * table are zero.
 */
class TableAlgebra final : public CochainAlgebra {
 public:
  /// Validates shapes, index ranges and the unit.
  static std::shared_ptr<const TableAlgebra> create(TableData data);

  const TableData& data() const { return data_; }

  const Field& field() const override { return data_.field; }
  std::optional<int> top_degree() const override;
  std::size_t dimension(int degree) const override;
  std::string basis_label(int degree, std::size_t index) const override;
  SparseVector multiply_basis(int p, std::size_t i, int q, std::size_t j) const override;
  SparseVector differential_basis(int p, std::size_t i) const override;
  std::optional<Cochain> atom(std::string_view name) const override;
  std::vector<std::string> atom_names() const override;
  std::shared_ptr<const CochainAlgebra> extend_scalars(const Field& target) const override;
  std::string describe() const override { return data_.description; }

  std::shared_ptr<const TableAlgebra> extended(const Field& target) const;

 private:
  struct Key {};

 public:
  TableAlgebra(Key, TableData data) : data_(std::move(data)) {}

 private:
  TableData data_;
};

using TableAlgebraPtr = std::shared_ptr<const TableAlgebra>;

/*
 * Reads off the structure constants of `alg` in degrees 0..max_degree,
 * dropping every component above max_degree. This is exactly the quotient
 * by the ideal of elements of degree > max_degree.
 *
 * serial:: is the reference; parallel:: fills the product table with one
 * OpenMP task per (p, q, i) row. Outputs are identical.
 */
namespace serial {
TableData tabulate(const CochainAlgebra& alg, int max_degree);
}
namespace parallel {
TableData tabulate(const CochainAlgebra& alg, int max_degree);
}
TableData tabulate(const CochainAlgebra& alg, int max_degree);

}  // namespace massey
