#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "massey/field.hpp"

namespace massey {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field());

  static Matrix identity(std::size_t n, Field field = Field());
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows, Field field);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols, Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  Vector apply(std::span<const FieldElement> x) const;
  Matrix operator*(const Matrix& other) const;
  Matrix transpose() const;
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<FieldElement> data_;
};

/// Reduced row echelon form together with its pivot columns (ascending).
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/*
 * Gauss-Jordan elimination to the (unique) reduced row echelon form.
 *
 * serial:: is the reference kernel; parallel:: distributes the row
 * updates of each pivot step over OpenMP threads. Both produce the same
 * matrix since the RREF is unique. row_reduce() picks one by size.
 */
namespace serial {
EchelonForm row_reduce(Matrix m);
}
namespace parallel {
EchelonForm row_reduce(Matrix m);
}
EchelonForm row_reduce(Matrix m);

/// Number of entries above which row_reduce() switches to the OpenMP kernel.
inline constexpr std::size_t kParallelEntryThreshold = 4096;

std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in free-column order.
std::vector<Vector> nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Some x with m x = b (free variables zero), if one exists.
std::optional<Vector> solve(const Matrix& m, std::span<const FieldElement> b);

/// Indices of a maximal independent prefix-greedy subset of the columns.
std::vector<std::size_t> independent_columns(const Matrix& m);

Vector zero_vector(std::size_t n, Field field);
bool is_zero(std::span<const FieldElement> v);

}  // namespace massey
