#include "massey/table_algebra.hpp"

#include <omp.h>

#include <stdexcept>
#include <tuple>

namespace massey {

namespace {

void check_sparse(const SparseVector& v, std::size_t dim, const std::string& what) {
  std::size_t last = 0;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (k >= dim) throw std::invalid_argument(what + ": index out of range");
    if (!first && k <= last) throw std::invalid_argument(what + ": indices not ascending");
    if (c.is_zero()) throw std::invalid_argument(what + ": explicit zero coefficient");
    last = k;
    first = false;
  }
}

SparseVector embed_sparse(const SparseVector& v, const Field& target) {
  SparseVector out;
  out.reserve(v.size());
  for (const auto& [k, c] : v) out.emplace_back(k, massey::embed(c, target));
  return out;
}

}  // namespace

std::shared_ptr<const TableAlgebra> TableAlgebra::create(TableData data) {
  // Trailing empty degrees carry no information.
  while (!data.labels.empty() && data.labels.back().empty()) data.labels.pop_back();
  const int top = static_cast<int>(data.labels.size()) - 1;
  if (top < 0 || data.labels[0].empty()) throw std::invalid_argument("table algebra needs a degree-0 unit");
  data.differential.resize(data.labels.size());
  auto dim = [&](int p) -> std::size_t { return p >= 0 && p <= top ? data.labels[p].size() : 0; };
  for (int p = 0; p <= top; ++p) {
    auto& dp = data.differential[p];
    if (dp.empty()) dp.resize(dim(p));
    if (dp.size() != dim(p)) throw std::invalid_argument("differential table has wrong size in degree " + std::to_string(p));
    for (auto& v : dp) check_sparse(v, dim(p + 1), "differential in degree " + std::to_string(p));
  }
  for (auto it = data.products.begin(); it != data.products.end();) {
    auto [p, q] = it->first;
    if (p < 0 || q < 0) throw std::invalid_argument("product table for negative degrees");
    if (p + q > top) {
      it = data.products.erase(it);
      continue;
    }
    if (it->second.size() != dim(p) * dim(q))
      throw std::invalid_argument("product table (" + std::to_string(p) + "," + std::to_string(q) + ") has wrong size");
    for (auto& v : it->second) check_sparse(v, dim(p + q), "product table");
    ++it;
  }
  for (auto& f : data.differential)
    for (auto& v : f)
      for (auto& [k, c] : v)
        if (!data.field.extends(c.field())) throw FieldMismatch("table coefficient outside the algebra's field");
  for (const auto& [name, c] : data.atoms)
    if (c.degree < 0 || c.degree > top || c.coords.size() != dim(c.degree))
      throw std::invalid_argument("atom '" + name + "' has the wrong shape");
  auto alg = std::make_shared<TableAlgebra>(Key{}, std::move(data));
  for (int q = 0; q <= top; ++q)
    for (std::size_t j = 0; j < alg->dimension(q); ++j) {
      SparseVector want{{j, FieldElement::one(alg->field())}};
      if (alg->multiply_basis(0, 0, q, j) != want || alg->multiply_basis(q, j, 0, 0) != want)
        throw std::invalid_argument("basis element 0 of degree 0 is not a unit");
    }
  return alg;
}

std::optional<int> TableAlgebra::top_degree() const { return static_cast<int>(data_.labels.size()) - 1; }

std::size_t TableAlgebra::dimension(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(data_.labels.size())) return 0;
  return data_.labels[degree].size();
}

std::string TableAlgebra::basis_label(int degree, std::size_t index) const { return data_.labels.at(degree).at(index); }

SparseVector TableAlgebra::multiply_basis(int p, std::size_t i, int q, std::size_t j) const {
  auto it = data_.products.find({p, q});
  if (it == data_.products.end()) return {};
  return it->second.at(i * dimension(q) + j);
}

SparseVector TableAlgebra::differential_basis(int p, std::size_t i) const {
  if (p < 0 || p >= static_cast<int>(data_.differential.size())) return {};
  return data_.differential[p].at(i);
}

std::optional<Cochain> TableAlgebra::atom(std::string_view name) const {
  for (const auto& [n, c] : data_.atoms)
    if (n == name) return c;
  return std::nullopt;
}

std::vector<std::string> TableAlgebra::atom_names() const {
  std::vector<std::string> out;
  for (const auto& [n, c] : data_.atoms) out.push_back(n);
  return out;
}

std::shared_ptr<const TableAlgebra> TableAlgebra::extended(const Field& target) const {
  if (!target.extends(data_.field))
    throw FieldMismatch("cannot extend " + data_.field.to_string() + " to " + target.to_string());
  TableData d = data_;
  d.field = target;
  for (auto& f : d.differential)
    for (auto& v : f) v = embed_sparse(v, target);
  for (auto& [k, table] : d.products)
    for (auto& v : table) v = embed_sparse(v, target);
  for (auto& [n, c] : d.atoms) c = massey::embed(c, target);
  return create(std::move(d));
}

std::shared_ptr<const CochainAlgebra> TableAlgebra::extend_scalars(const Field& target) const { return extended(target); }

namespace {

TableData tabulate_skeleton(const CochainAlgebra& alg, int max_degree) {
  TableData d;
  d.field = alg.field();
  d.description = alg.describe();
  for (int p = 0; p <= max_degree; ++p) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < alg.dimension(p); ++i) labels.push_back(alg.basis_label(p, i));
    d.labels.push_back(std::move(labels));
  }
  d.differential.resize(max_degree + 1);
  for (int p = 0; p <= max_degree; ++p)
    for (std::size_t i = 0; i < alg.dimension(p); ++i)
      d.differential[p].push_back(p + 1 <= max_degree ? alg.differential_basis(p, i) : SparseVector{});
  for (const auto& name : alg.atom_names()) {
    auto c = alg.atom(name);
    if (c && c->degree <= max_degree) d.atoms.emplace_back(name, *c);
  }
  for (int p = 0; p <= max_degree; ++p)
    for (int q = 0; p + q <= max_degree; ++q)
      d.products[{p, q}].resize(alg.dimension(p) * alg.dimension(q));
  return d;
}

}  // namespace

namespace serial {
TableData tabulate(const CochainAlgebra& alg, int max_degree) {
  TableData d = tabulate_skeleton(alg, max_degree);
  for (auto& [pq, table] : d.products) {
    auto [p, q] = pq;
    std::size_t dq = alg.dimension(q);
    for (std::size_t i = 0; i < alg.dimension(p); ++i)
      for (std::size_t j = 0; j < dq; ++j) table[i * dq + j] = alg.multiply_basis(p, i, q, j);
  }
  return d;
}
}  // namespace serial

namespace parallel {
TableData tabulate(const CochainAlgebra& alg, int max_degree) {
  TableData d = tabulate_skeleton(alg, max_degree);
  std::vector<std::tuple<std::vector<SparseVector>*, int, int, std::size_t>> rows;
  for (auto& [pq, table] : d.products)
    for (std::size_t i = 0; i < alg.dimension(pq.first); ++i) rows.emplace_back(&table, pq.first, pq.second, i);
  const auto n = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    auto [table, p, q, i] = rows[r];
    std::size_t dq = alg.dimension(q);
    for (std::size_t j = 0; j < dq; ++j) (*table)[i * dq + j] = alg.multiply_basis(p, i, q, j);
  }
  return d;
}
}  // namespace parallel

TableData tabulate(const CochainAlgebra& alg, int max_degree) {
  std::size_t entries = 0;
  for (int p = 0; p <= max_degree; ++p)
    for (int q = 0; p + q <= max_degree; ++q) entries += alg.dimension(p) * alg.dimension(q);
  if (entries >= 4096 && !omp_in_parallel()) return parallel::tabulate(alg, max_degree);
  return serial::tabulate(alg, max_degree);
}

}  // namespace massey
