#include "massey/constructions.hpp"

#include <stdexcept>

namespace massey {

namespace {

Matrix columns_to_matrix(const std::vector<Cochain>& cols, std::size_t rows, const Field& f) {
  Matrix m(rows, cols.size(), f);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c].coords[r];
  return m;
}

}  // namespace

DgaMorphism DgaMorphism::from_matrices(AlgebraPtr source, AlgebraPtr target, std::map<int, Matrix> matrices,
                                       int max_degree) {
  if (!target->field().extends(source->field())) throw FieldMismatch("morphism target field does not extend the source");
  for (int p = 0; p <= max_degree + 1; ++p) {
    auto it = matrices.find(p);
    if (it == matrices.end()) {
      if (source->dimension(p) == 0 || target->dimension(p) == 0) {
        matrices.emplace(p, Matrix(target->dimension(p), source->dimension(p), target->field()));
        continue;
      }
      throw std::invalid_argument("morphism matrix missing in degree " + std::to_string(p));
    }
    if (it->second.rows() != target->dimension(p) || it->second.cols() != source->dimension(p))
      throw std::invalid_argument("morphism matrix has the wrong shape in degree " + std::to_string(p));
  }
  DgaMorphism f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.matrices_ = std::move(matrices);
  f.max_degree_ = max_degree;
  return f;
}

DgaMorphism DgaMorphism::from_generators(std::shared_ptr<const FreeCdga> source, AlgebraPtr target,
                                         const std::map<std::string, Cochain>& images, int max_degree) {
  const auto& gens = source->generators();
  std::vector<Cochain> gen_images;
  for (const auto& g : gens) {
    auto it = images.find(g.name);
    if (it == images.end()) throw std::invalid_argument("no image for generator '" + g.name + "'");
    Cochain img = it->second;
    if (img.is_zero()) img = target->zero(g.degree);
    if (img.degree != g.degree) throw std::invalid_argument("image of '" + g.name + "' has the wrong degree");
    gen_images.push_back(embed(img, target->field()));
  }
  std::map<int, Matrix> matrices;
  for (int p = 0; p <= max_degree + 1; ++p) {
    std::vector<Cochain> cols;
    for (const auto& m : source->graded_basis(p)) {
      Cochain acc = target->unit();
      for (std::size_t g = 0; g < gens.size(); ++g)
        for (unsigned e = 0; e < m[g]; ++e) acc = multiply(*target, acc, gen_images[g]);
      if (acc.is_zero()) acc = target->zero(p);
      cols.push_back(std::move(acc));
    }
    matrices.emplace(p, columns_to_matrix(cols, target->dimension(p), target->field()));
  }
  return from_matrices(std::move(source), std::move(target), std::move(matrices), max_degree);
}

Cochain DgaMorphism::apply(const Cochain& x) const {
  if (x.is_zero() && x.degree > max_degree_ + 1) return target_->zero(x.degree);
  const Matrix& m = matrices_.at(x.degree);
  Cochain xe = embed(x, target_->field());
  return {x.degree, m.apply(xe.coords)};
}

bool DgaMorphism::commutes_with_d() const {
  for (int p = 0; p <= max_degree_; ++p)
    for (std::size_t i = 0; i < source_->dimension(p); ++i) {
      auto e = source_->basis_vector(p, i);
      if (!(apply(differential(*source_, e)) == differential(*target_, apply(e)))) return false;
    }
  return true;
}

bool DgaMorphism::is_multiplicative() const {
  for (int p = 0; p <= max_degree_; ++p)
    for (int q = 0; p + q <= max_degree_; ++q)
      for (std::size_t i = 0; i < source_->dimension(p); ++i)
        for (std::size_t j = 0; j < source_->dimension(q); ++j) {
          auto a = source_->basis_vector(p, i);
          auto b = source_->basis_vector(q, j);
          if (!(apply(multiply(*source_, a, b)) == multiply(*target_, apply(a), apply(b)))) return false;
        }
  return true;
}

Matrix DgaMorphism::on_cohomology(int degree) const {
  auto basis = cohomology_basis(*source_, degree);
  std::vector<Cochain> cols;
  const std::size_t rows = cohomology_dimension(*target_, degree);
  for (const auto& h : basis) {
    auto img = class_of(*target_, apply(representative(*source_, h)));
    cols.push_back({degree, img.coords});
  }
  return columns_to_matrix(cols, rows, target_->field());
}

bool is_1_quasi_iso(const DgaMorphism& f) {
  Matrix h1 = f.on_cohomology(1);
  Matrix h2 = f.on_cohomology(2);
  return h1.rows() == h1.cols() && rank(h1) == h1.cols() && rank(h2) == h2.cols();
}

bool check_isomorphism(const DgaMorphism& f) {
  for (int p = 0; p <= f.max_degree(); ++p) {
    const Matrix& m = f.matrix(p);
    if (m.rows() != m.cols() || rank(m) != m.cols()) return false;
  }
  for (const auto* alg : {f.source().get(), f.target().get()}) {
    auto top = alg->top_degree();
    if (!top || *top > f.max_degree()) return false;
  }
  return f.commutes_with_d() && f.is_multiplicative();
}

Truncation truncate(const AlgebraPtr& alg, int n) {
  if (n < 1) throw std::invalid_argument("truncation degree must be at least 1");
  TableData d = tabulate(*alg, n - 1);
  d.description = "truncate(" + alg->describe() + ", " + std::to_string(n) + ")";
  auto table = TableAlgebra::create(std::move(d));
  std::map<int, Matrix> matrices;
  for (int p = 0; p <= n; ++p) {
    std::size_t dim = alg->dimension(p);
    matrices.emplace(p, p < n ? Matrix::identity(dim, alg->field()) : Matrix(0, dim, alg->field()));
  }
  auto quotient = DgaMorphism::from_matrices(alg, table, std::move(matrices), n - 1);
  return {table, std::move(quotient)};
}

AlgebraPtr extend_scalars(const AlgebraPtr& alg, const Field& field, int check_degree) {
  if (!field.extends(alg->field()))
    throw FieldMismatch("cannot extend " + alg->field().to_string() + " to " + field.to_string());
  if (field == alg->field()) return alg;
  auto ext = alg->extend_scalars(field);
  int top = alg->top_degree().value_or(check_degree);
  for (int k = 0; k <= std::min(top, check_degree); ++k)
    if (cohomology_dimension(*alg, k) != cohomology_dimension(*ext, k))
      throw std::logic_error("extension of scalars changed a cohomology dimension");
  return ext;
}

Cochain DualizedAlgebra::include(const Cochain& x) const {
  Cochain out = algebra->zero(x.degree);
  for (std::size_t i = 0; i < x.coords.size(); ++i) out.coords[i] = x.coords[i];
  return out;
}

std::size_t DualizedAlgebra::dual_index(int k, std::size_t index) const { return base->dimension(k) + index; }

int default_dualization_degree(const CochainAlgebra& alg) {
  auto top = alg.top_degree();
  if (!top) throw std::invalid_argument("dualization needs a finite-dimensional algebra");
  return 2 * *top + 1;
}

DualizedAlgebra poincare_dualize(const AlgebraPtr& alg, int n) {
  const CochainAlgebra& a = *alg;
  auto top = a.top_degree();
  if (!top) throw std::invalid_argument("dualization needs a finite-dimensional algebra (truncate first)");
  if (n < 1 || *top > n) throw std::invalid_argument("dualization degree must be at least the top degree");
  if (a.dimension(0) != 1 || cohomology_dimension(a, 0) != 1) throw std::invalid_argument("dualization needs a connected algebra");
  for (int k = n; k <= *top; ++k)
    if (cohomology_dimension(a, k) != 0)
      throw std::invalid_argument("dualization degree must exceed the top cohomological degree");

  const Field& f = a.field();
  auto dimA = [&](int k) -> std::size_t { return k < 0 || k > n ? 0 : a.dimension(k); };
  auto dimP = [&](int k) { return dimA(k) + dimA(n - k); };
  // [e_s](x) for a sparse x.
  auto coeff = [](const SparseVector& x, std::size_t s) -> FieldElement {
    for (const auto& [k, c] : x)
      if (k == s) return c;
    return FieldElement();
  };

  TableData d;
  d.field = f;
  d.description = "P_" + std::to_string(n) + "(" + a.describe() + ")";
  d.labels.resize(n + 1);
  d.differential.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i < dimA(k); ++i) d.labels[k].push_back(a.basis_label(k, i));
    for (std::size_t s = 0; s < dimA(n - k); ++s) d.labels[k].push_back("dual(" + a.basis_label(n - k, s) + ")");
  }

  for (int p = 0; p <= n; ++p) {
    for (std::size_t i = 0; i < dimA(p); ++i) d.differential[p].push_back(p + 1 <= n ? a.differential_basis(p, i) : SparseVector{});
    // d(phi)(b) = (-1)^{|phi|-1} phi(db) for b in A^{n-p-1}.
    for (std::size_t s = 0; s < dimA(n - p); ++s) {
      SparseVector v;
      if (p + 1 <= n) {
        FieldElement sign = sign_of(p - 1);
        for (std::size_t r = 0; r < dimA(n - p - 1); ++r) {
          FieldElement c = coeff(a.differential_basis(n - p - 1, r), s);
          if (!c.is_zero()) v.emplace_back(dimA(p + 1) + r, c * sign);
        }
      }
      d.differential[p].push_back(std::move(v));
    }
  }

  for (int p = 0; p <= n; ++p)
    for (int q = 0; p + q <= n; ++q) {
      auto& table = d.products[{p, q}];
      const std::size_t dq = dimP(q);
      table.assign(dimP(p) * dq, {});
      const int r = p + q;
      for (std::size_t i = 0; i < dimP(p); ++i)
        for (std::size_t j = 0; j < dq; ++j) {
          const bool i_dual = i >= dimA(p);
          const bool j_dual = j >= dimA(q);
          SparseVector out;
          if (!i_dual && !j_dual) {
            out = a.multiply_basis(p, i, q, j);
          } else if (i_dual != j_dual) {
            // phi of degree pd, a of degree qa: (phi a)(b) = phi(a b) for b in A^{n-pd-qa}.
            const std::size_t s = i_dual ? i - dimA(p) : j - dimA(q);
            const std::size_t t = i_dual ? j : i;
            const int qa = i_dual ? q : p;
            FieldElement sign = i_dual ? FieldElement(1) : sign_of(p * q);
            for (std::size_t b = 0; b < dimA(n - r); ++b) {
              FieldElement c = coeff(a.multiply_basis(qa, t, n - r, b), s);
              if (!c.is_zero()) out.emplace_back(dimA(r) + b, c * sign);
            }
          }
          table[i * dq + j] = std::move(out);
        }
    }

  for (const auto& name : a.atom_names()) {
    Cochain c = *a.atom(name);
    Cochain padded{c.degree, zero_vector(dimP(c.degree), f)};
    for (std::size_t i = 0; i < c.coords.size(); ++i) padded.coords[i] = c.coords[i];
    d.atoms.emplace_back(name, std::move(padded));
  }
  Cochain vol{n, zero_vector(dimP(n), f)};
  vol.coords[dimA(n)] = FieldElement::one(f);
  d.atoms.emplace_back("vol", vol);

  DualizedAlgebra out;
  out.algebra = TableAlgebra::create(std::move(d));
  out.base = alg;
  out.n = n;
  out.volume = std::move(vol);
  return out;
}

FieldElement integrate(const DualizedAlgebra& p, const CohomologyClass& top) {
  if (top.degree != p.n) throw std::invalid_argument("integrate needs a class of the top degree");
  auto vol = class_of(*p.algebra, p.volume);
  if (vol.is_zero()) throw std::logic_error("volume class vanishes");
  // H^n is spanned by the volume class.
  std::size_t k = 0;
  while (vol.coords[k].is_zero()) ++k;
  FieldElement t = top.coords[k] / vol.coords[k];
  for (std::size_t m = 0; m < vol.coords.size(); ++m)
    if (!(vol.coords[m] * t == top.coords[m])) throw std::logic_error("top cohomology is not spanned by the volume class");
  return t;
}

Matrix pairing_matrix(const DualizedAlgebra& p, int k) {
  const auto& alg = *p.algebra;
  auto left = cohomology_basis(alg, k);
  auto right = cohomology_basis(alg, p.n - k);
  Matrix m(left.size(), right.size(), alg.field());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) m(i, j) = integrate(p, cup(alg, left[i], right[j]));
  return m;
}

}  // namespace massey
