#include <catch_amalgamated.hpp>

#include <random>

#include "massey/linalg.hpp"
#include "support.hpp"

using namespace massey;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937& rng, const Field& f = Field(), double density = 0.5) {
  std::bernoulli_distribution keep(density);
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng)) m(i, j) = support::random_scalar(rng, f, 4);
  return m;
}

std::vector<std::vector<mpq_class>> to_rows(const Matrix& m) {
  std::vector<std::vector<mpq_class>> rows(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).rational_part();
  return rows;
}

}  // namespace

TEST_CASE("rank agrees with an independent elimination") {
  std::mt19937 rng(21);
  for (int t = 0; t < 100; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 9);
    auto m = random_matrix(dim(rng), dim(rng), rng, Field(), 0.4);
    CHECK(rank(m) == support::oracle_rank(to_rows(m)));
  }
}

TEST_CASE("reduced row echelon form is reduced") {
  std::mt19937 rng(22);
  for (int t = 0; t < 50; ++t) {
    auto m = random_matrix(6, 8, rng, Field::adjoin_sqrt(-1));
    auto e = row_reduce(m);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      CHECK(e.reduced(i, e.pivots[i]).is_one());
      for (std::size_t r = 0; r < e.reduced.rows(); ++r)
        if (r != i) CHECK(e.reduced(r, e.pivots[i]).is_zero());
    }
    for (std::size_t r = e.pivots.size(); r < e.reduced.rows(); ++r) CHECK(is_zero(e.reduced.row(r)));
  }
}

TEST_CASE("nullspace vectors are killed and independent") {
  std::mt19937 rng(23);
  for (int t = 0; t < 50; ++t) {
    auto m = random_matrix(4, 7, rng);
    auto ns = nullspace(m);
    CHECK(ns.size() == m.cols() - rank(m));
    for (const auto& v : ns) CHECK(is_zero(m.apply(v)));
    if (!ns.empty()) CHECK(rank(Matrix::from_columns(ns, m.cols(), m.field())) == ns.size());
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937 rng(24);
  for (int t = 0; t < 30; ++t) {
    auto m = random_matrix(5, 5, rng, Field::adjoin_sqrt(2), 0.9);
    auto inv = inverse(m);
    if (rank(m) < 5) {
      CHECK_FALSE(inv);
      continue;
    }
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(5, m.field()));
    Vector b = zero_vector(5, m.field());
    for (auto& x : b) x = support::random_scalar(rng, m.field());
    auto x = solve(m, b);
    REQUIRE(x);
    CHECK(m.apply(*x) == b);
  }
  Matrix singular(2, 2);
  singular(0, 0) = FieldElement(1);
  Vector b{FieldElement(0), FieldElement(1)};
  CHECK_FALSE(solve(singular, b));
}

TEST_CASE("serial and OpenMP row reduction agree") {
  std::mt19937 rng(25);
  for (std::size_t n : {3u, 20u, 70u}) {
    auto m = random_matrix(n, n + 5, rng, Field(), 0.3);
    auto s = serial::row_reduce(m);
    auto p = parallel::row_reduce(m);
    CHECK(s.reduced == p.reduced);
    CHECK(s.pivots == p.pivots);
  }
  auto m = random_matrix(30, 30, rng, Field::adjoin_sqrt(-1), 0.3);
  CHECK(serial::row_reduce(m).reduced == parallel::row_reduce(m).reduced);
}
