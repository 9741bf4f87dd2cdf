#include "massey/cohomology.hpp"

namespace massey {

namespace {

// Columns are d(e_j) for the basis of `degree`.
Matrix differential_matrix(const CochainAlgebra& alg, int degree) {
  const std::size_t rows = alg.dimension(degree + 1);
  const std::size_t cols = degree < 0 ? 0 : alg.dimension(degree);
  Matrix m(rows, cols, alg.field());
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [k, c] : alg.differential_basis(degree, j)) m(k, j) = c;
  return m;
}

Vector unit_vector(std::size_t n, std::size_t k, const Field& f) {
  Vector v = zero_vector(n, f);
  v[k] = FieldElement::one(f);
  return v;
}

std::shared_ptr<const Splitting> build_splitting(const CochainAlgebra& alg, int degree) {
  auto s = std::make_shared<Splitting>();
  s->degree = degree;
  s->field = alg.field();
  s->dimension = degree < 0 ? 0 : alg.dimension(degree);
  const std::size_t n = s->dimension;
  const Field& f = s->field;

  if (degree > 0) {
    Matrix below = differential_matrix(alg, degree - 1);
    auto ef = row_reduce(below);
    for (auto p : ef.pivots) {
      s->basis_im.push_back(below.column(p));
      s->delta.push_back(unit_vector(below.cols(), p, f));
    }
  }

  Matrix here = differential_matrix(alg, degree);
  auto ef = row_reduce(here);
  for (auto p : ef.pivots) s->basis_i.push_back(unit_vector(n, p, f));

  // Greedy complement of the image inside the kernel.
  std::vector<Vector> spanned = s->basis_im;
  std::size_t current = spanned.size();
  for (auto& k : nullspace(here)) {
    spanned.push_back(k);
    std::size_t r = rank(Matrix::from_columns(spanned, n, f));
    if (r > current) {
      s->basis_c.push_back(std::move(k));
      current = r;
    } else {
      spanned.pop_back();
    }
  }

  std::vector<Vector> all = s->basis_im;
  all.insert(all.end(), s->basis_c.begin(), s->basis_c.end());
  all.insert(all.end(), s->basis_i.begin(), s->basis_i.end());
  if (all.size() != n) throw std::logic_error("splitting does not span the graded piece");
  auto inv = inverse(Matrix::from_columns(all, n, f));
  if (!inv) throw std::logic_error("splitting bases are dependent");
  s->to_split = std::move(*inv);
  return s;
}

}  // namespace

std::shared_ptr<const Splitting> compute_splitting(const CochainAlgebra& alg, int degree) {
  if (auto cached = alg.cached_splitting(degree)) return cached;
  auto s = build_splitting(alg, degree);
  alg.store_splitting(degree, s);
  return alg.cached_splitting(degree);
}

std::size_t cohomology_dimension(const CochainAlgebra& alg, int degree) {
  return compute_splitting(alg, degree)->basis_c.size();
}

std::vector<CohomologyClass> cohomology_basis(const CochainAlgebra& alg, int degree) {
  auto s = compute_splitting(alg, degree);
  std::vector<CohomologyClass> out;
  for (std::size_t k = 0; k < s->basis_c.size(); ++k)
    out.push_back({degree, unit_vector(s->basis_c.size(), k, alg.field())});
  return out;
}

Cochain representative(const CochainAlgebra& alg, const CohomologyClass& cls) {
  auto s = compute_splitting(alg, cls.degree);
  if (cls.coords.size() != s->basis_c.size()) throw std::invalid_argument("class has the wrong number of coordinates");
  Cochain out = alg.zero(cls.degree);
  for (std::size_t k = 0; k < cls.coords.size(); ++k)
    if (!cls.coords[k].is_zero()) out = out + scale(s->c_element(k), cls.coords[k]);
  return out;
}

CohomologyClass class_of(const CochainAlgebra& alg, const Cochain& x) {
  auto s = compute_splitting(alg, x.degree);
  auto parts = decompose(*s, x);
  if (!is_zero(parts.i)) throw NotClosed("element " + to_string(alg, x) + " is not closed");
  return {x.degree, std::move(parts.c)};
}

bool is_closed(const CochainAlgebra& alg, const Cochain& x) { return differential(alg, x).is_zero(); }

bool is_exact(const CochainAlgebra& alg, const Cochain& x) {
  auto parts = decompose(*compute_splitting(alg, x.degree), x);
  return is_zero(parts.c) && is_zero(parts.i);
}

Cochain primitive(const CochainAlgebra& alg, const Cochain& x) {
  auto s = compute_splitting(alg, x.degree);
  auto parts = decompose(*s, x);
  if (!is_zero(parts.c) || !is_zero(parts.i)) throw NotExact("element " + to_string(alg, x) + " is not exact");
  return apply_delta(alg, *s, parts.im);
}

CohomologyClass cup(const CochainAlgebra& alg, const CohomologyClass& x, const CohomologyClass& y) {
  return class_of(alg, multiply(alg, representative(alg, x), representative(alg, y)));
}

}  // namespace massey
