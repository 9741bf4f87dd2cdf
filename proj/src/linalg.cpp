#include "massey/linalg.hpp"

#include <omp.h>

#include <stdexcept>

namespace massey {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, FieldElement::zero(field)) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(field);
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows, Field field) {
  Matrix m(rows, columns.size(), field);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols, Field field) {
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vector Matrix::apply(std::span<const FieldElement> x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in Matrix::apply");
  Vector y(rows_, FieldElement::zero(field_));
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& e = (*this)(r, c);
      if (!e.is_zero()) y[r] += e * x[c];
    }
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in Matrix product");
  Matrix out(rows_, other.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const auto& b = other(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

namespace {

// Scale the pivot row so the pivot becomes 1.
void normalize_row(Matrix& m, std::size_t r, std::size_t col) {
  FieldElement inv = m(r, col).inverse();
  for (std::size_t c = col; c < m.cols(); ++c)
    if (!m(r, c).is_zero()) m(r, c) *= inv;
}

// row_target -= factor * row_pivot, from column `col` on.
void eliminate_row(Matrix& m, std::size_t target, std::size_t pivot_row, std::size_t col) {
  FieldElement factor = m(target, col);
  if (factor.is_zero()) return;
  for (std::size_t c = col; c < m.cols(); ++c) {
    const auto& p = m(pivot_row, c);
    if (!p.is_zero()) m(target, c) -= factor * p;
  }
}

std::optional<std::size_t> find_pivot(const Matrix& m, std::size_t from_row, std::size_t col) {
  for (std::size_t r = from_row; r < m.rows(); ++r)
    if (!m(r, col).is_zero()) return r;
  return std::nullopt;
}

}  // namespace

namespace serial {

EchelonForm row_reduce(Matrix m) {
  EchelonForm out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    auto p = find_pivot(m, lead, col);
    if (!p) continue;
    m.swap_rows(lead, *p);
    normalize_row(m, lead, col);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != lead) eliminate_row(m, r, lead, col);
    out.pivots.push_back(col);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

}  // namespace serial

namespace parallel {

EchelonForm row_reduce(Matrix m) {
  EchelonForm out;
  std::size_t lead = 0;
  const auto nrows = static_cast<std::ptrdiff_t>(m.rows());
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    auto p = find_pivot(m, lead, col);
    if (!p) continue;
    m.swap_rows(lead, *p);
    normalize_row(m, lead, col);
    const auto pivot_row = static_cast<std::ptrdiff_t>(lead);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t r = 0; r < nrows; ++r)
      if (r != pivot_row)
        eliminate_row(m, static_cast<std::size_t>(r), lead, col);
    out.pivots.push_back(col);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

}  // namespace parallel

EchelonForm row_reduce(Matrix m) {
  if (m.rows() * m.cols() >= kParallelEntryThreshold && !omp_in_parallel())
    return parallel::row_reduce(std::move(m));
  return serial::row_reduce(std::move(m));
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  auto ef = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.cols(), m.field());
    v[f] = FieldElement::one(m.field());
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) v[ef.pivots[i]] = -ef.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = FieldElement::one(m.field());
  }
  auto ef = row_reduce(std::move(aug));
  if (ef.pivots.size() < n || (n > 0 && ef.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n, m.field());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
  return inv;
}

std::optional<Vector> solve(const Matrix& m, std::span<const FieldElement> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto ef = row_reduce(std::move(aug));
  if (!ef.pivots.empty() && ef.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.cols(), m.field());
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) x[ef.pivots[i]] = ef.reduced(i, m.cols());
  return x;
}

std::vector<std::size_t> independent_columns(const Matrix& m) { return row_reduce(m).pivots; }

Vector zero_vector(std::size_t n, Field field) { return Vector(n, FieldElement::zero(field)); }

bool is_zero(std::span<const FieldElement> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace massey
