#include <catch_amalgamated.hpp>

#include <random>

#include "massey/constructions.hpp"
#include "massey/corpus.hpp"
#include "support.hpp"

using namespace massey;

namespace {

std::size_t total_dimension(const CochainAlgebra& a) {
  std::size_t n = 0;
  for (int k = 0; k <= *a.top_degree(); ++k) n += a.dimension(k);
  return n;
}

bool same_table(const TableData& x, const TableData& y) {
  if (x.labels != y.labels || x.products.size() != y.products.size()) return false;
  auto same_sparse = [](const SparseVector& p, const SparseVector& q) {
    if (p.size() != q.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i].first != q[i].first || !(p[i].second == q[i].second)) return false;
    return true;
  };
  for (std::size_t k = 0; k < x.differential.size(); ++k)
    for (std::size_t i = 0; i < x.differential[k].size(); ++i)
      if (!same_sparse(x.differential[k][i], y.differential[k][i])) return false;
  for (const auto& [key, table] : x.products) {
    auto it = y.products.find(key);
    if (it == y.products.end() || it->second.size() != table.size()) return false;
    for (std::size_t i = 0; i < table.size(); ++i)
      if (!same_sparse(table[i], it->second[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("truncation of the real Iwasawa model") {
  auto a = build("iwasawa_real");
  auto t = truncate(a, 3);
  CHECK(*t.algebra->top_degree() == 2);
  CHECK(total_dimension(*t.algebra) == 1 + 6 + 15);
  CHECK(t.quotient.commutes_with_d());
  CHECK(t.quotient.is_multiplicative());
  CHECK(is_1_quasi_iso(t.quotient));
  CHECK(check_structure(*t.algebra, 2, true).ok());
  for (int k = 3; k <= 8; ++k) CHECK(cohomology_dimension(*t.algebra, k) == 0);
  CHECK_THROWS_AS(truncate(a, 0), std::invalid_argument);
}

TEST_CASE("truncation below degree 2 is not a 1-quasi-isomorphism") {
  auto a = build("heisenberg_squared");
  auto t = truncate(a, 2);
  // H^2 of the quotient vanishes, but H^1 grows: x3, y3 become closed.
  CHECK(cohomology_dimension(*t.algebra, 1) == 6);
  CHECK_FALSE(is_1_quasi_iso(t.quotient));
}

TEST_CASE("serial and parallel tabulation agree") {
  auto a = build("quadruple");
  CHECK(same_table(serial::tabulate(*a, 12), parallel::tabulate(*a, 12)));
  auto b = build("iwasawa_complex");
  CHECK(same_table(serial::tabulate(*b, 6), parallel::tabulate(*b, 6)));
}

TEST_CASE("extension of scalars keeps Betti numbers") {
  auto a = build("iwasawa_real");
  auto f = Field::adjoin_sqrt(-1);
  auto e = extend_scalars(a, f);
  CHECK(e->field() == f);
  for (int k = 0; k <= 6; ++k) CHECK(cohomology_dimension(*e, k) == cohomology_dimension(*a, k));
  CHECK(extend_scalars(a, a->field()) == a);
  auto c = build("iwasawa_complex");
  CHECK_THROWS_AS(extend_scalars(c, Field::adjoin_sqrt(2)), FieldMismatch);
  CHECK_THROWS_AS(extend_scalars(c, Field()), FieldMismatch);
  auto t = truncate(a, 3).algebra;
  auto te = extend_scalars(t, Field::adjoin_sqrt(2));
  // Every degree-2 element of the truncation is closed.
  CHECK(cohomology_dimension(*te, 2) == 13);
}

TEST_CASE("morphisms from generator images") {
  auto h = build_free("heisenberg_squared");
  auto i = build("iwasawa_complex");
  // Relabel x -> phi, y -> phibar.
  std::map<std::string, Cochain> images;
  for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
           {"x1", "phi1"}, {"x2", "phi2"}, {"x3", "phi3"}, {"y1", "phibar1"}, {"y2", "phibar2"}, {"y3", "phibar3"}})
    images.emplace(x, parse_cochain(*i, y));
  auto f = DgaMorphism::from_generators(h, i, images, 6);
  CHECK(f.commutes_with_d());
  CHECK(f.is_multiplicative());
  CHECK(check_isomorphism(f));

  // Sending x3 to 0 breaks the differential.
  images.at("x3") = i->zero(1);
  auto g = DgaMorphism::from_generators(h, i, images, 6);
  CHECK_FALSE(g.commutes_with_d());
  CHECK_FALSE(check_isomorphism(g));

  images.erase("x3");
  CHECK_THROWS_AS(DgaMorphism::from_generators(h, i, images, 3), std::invalid_argument);
}

TEST_CASE("Poincare dualization of a truncated Heisenberg model") {
  auto base = truncate(build("heisenberg_squared"), 3).algebra;
  int n = default_dualization_degree(*base);
  CHECK(n == 5);
  auto p = poincare_dualize(base, n);
  const auto& alg = *p.algebra;
  CHECK(check_structure(alg, n, true).ok());
  for (int k = 0; k <= n; ++k) {
    CHECK(alg.dimension(k) == base->dimension(k) + (n - k <= 2 ? base->dimension(n - k) : 0));
    CHECK(cohomology_dimension(alg, k) == cohomology_dimension(alg, n - k));
    auto m = pairing_matrix(p, k);
    CHECK(m.rows() == m.cols());
    CHECK(rank(m) == m.rows());
  }
  CHECK(integrate(p, class_of(alg, p.volume)) == FieldElement(1));
  CHECK(p.dual_index(n, 0) == 0);
  CHECK(p.dual_index(3, 1) == base->dimension(3) + 1);

  // The inclusion of A is multiplicative.
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto x = support::random_cochain(*base, 1, rng);
    auto y = support::random_cochain(*base, 1, rng);
    CHECK(p.include(multiply(*base, x, y)) == multiply(alg, p.include(x), p.include(y)));
  }
  CHECK_THROWS_AS(integrate(p, class_of(alg, p.include(parse_cochain(*base, "x1")))), std::invalid_argument);
}

TEST_CASE("dualization preconditions") {
  CHECK_THROWS_AS(poincare_dualize(build("heisenberg_squared"), 6), std::invalid_argument);
  auto t = truncate(build("heisenberg_squared"), 3).algebra;
  CHECK_THROWS_AS(poincare_dualize(t, 1), std::invalid_argument);
  // H^2 of the truncation is nonzero, so n = 2 is too small.
  CHECK_THROWS_AS(poincare_dualize(t, 2), std::invalid_argument);
  CHECK_THROWS_AS(default_dualization_degree(*build("quadruple")), std::invalid_argument);
}
