#pragma once

// Shared helpers for the unit tests and the acceptance runner: seeded
// random elements, and an independent exterior-algebra oracle that shares
// no code with the library (bitmask basis, plain mpq elimination).

#include <gmpxx.h>

#include <bit>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "massey/cohomology.hpp"
#include "massey/field.hpp"

namespace support {

using massey::Cochain;
using massey::CochainAlgebra;
using massey::CohomologyClass;
using massey::Field;
using massey::FieldElement;
using massey::Rational;

inline Rational random_rational(std::mt19937& rng, int height = 5) {
  std::uniform_int_distribution<int> num(-height, height);
  std::uniform_int_distribution<int> den(1, height);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(std::mt19937& rng, int height = 5) {
  Rational q;
  do q = random_rational(rng, height);
  while (sgn(q) == 0);
  return q;
}

/// Rational, or a + b s over an extension.
inline FieldElement random_scalar(std::mt19937& rng, const Field& f, int height = 5) {
  if (f.is_rationals()) return FieldElement(random_rational(rng, height), 0, f);
  return FieldElement(random_rational(rng, height), random_rational(rng, height), f);
}

/// Random homogeneous element; each coordinate is zero with probability 1 - density.
inline Cochain random_cochain(const CochainAlgebra& alg, int degree, std::mt19937& rng, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  Cochain x = alg.zero(degree);
  for (auto& c : x.coords)
    if (keep(rng)) c = random_scalar(rng, alg.field());
  return x;
}

inline CohomologyClass random_class(const CochainAlgebra& alg, int degree, std::mt19937& rng, double density = 0.6) {
  auto n = massey::cohomology_dimension(alg, degree);
  std::bernoulli_distribution keep(density);
  CohomologyClass c{degree, massey::zero_vector(n, alg.field())};
  for (auto& x : c.coords)
    if (keep(rng)) x = random_scalar(rng, alg.field(), 3);
  return c;
}

/// Rank by plain Gaussian elimination over Q.
inline std::size_t oracle_rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/*
 * Exterior algebra over Q on n degree-1 generators e_0..e_{n-1}; a basis
 * monomial is a bitmask with ascending factors. d is given on generators
 * as sums c * e_a e_b.
 */
struct Exterior {
  int n = 0;
  std::vector<std::vector<std::tuple<int, int, mpq_class>>> d;

  using Element = std::map<unsigned, mpq_class>;

  static int wedge_sign(unsigned x, unsigned y) {
    int swaps = 0;
    for (unsigned q = y; q; q &= q - 1) {
      unsigned bit = q & -q;
      swaps += std::popcount(x & ~((bit << 1) - 1));
    }
    return swaps % 2 ? -1 : 1;
  }

  static void add(Element& out, unsigned mask, const mpq_class& c) {
    auto& slot = out[mask];
    slot += c;
    if (slot == 0) out.erase(mask);
  }

  Element differential(unsigned mask) const {
    Element out;
    int position = 0;
    for (int g = 0; g < n; ++g) {
      if (!(mask & (1u << g))) continue;
      unsigned before = mask & ((1u << g) - 1);
      unsigned after = mask & ~((1u << (g + 1)) - 1);
      for (const auto& [a, b, c] : d[g]) {
        unsigned ab = (1u << a) | (1u << b);
        if (a == b || (ab & (before | after))) continue;
        int s = (a < b ? 1 : -1) * wedge_sign(before, ab) * wedge_sign(before | ab, after);
        add(out, before | ab | after, (position % 2 ? -1 : 1) * s * c);
      }
      ++position;
    }
    return out;
  }

  std::vector<unsigned> basis(int k) const {
    std::vector<unsigned> out;
    for (unsigned m = 0; m < (1u << n); ++m)
      if (std::popcount(m) == k) out.push_back(m);
    return out;
  }

  std::size_t rank_d(int k) const {
    if (k < 0 || k >= n) return 0;
    auto src = basis(k);
    auto tgt = basis(k + 1);
    std::map<unsigned, std::size_t> index;
    for (std::size_t i = 0; i < tgt.size(); ++i) index[tgt[i]] = i;
    std::vector<std::vector<mpq_class>> rows;
    for (unsigned m : src) {
      std::vector<mpq_class> row(tgt.size());
      for (const auto& [t, c] : differential(m)) row[index.at(t)] = c;
      rows.push_back(std::move(row));
    }
    return oracle_rank(std::move(rows));
  }

  std::size_t betti(int k) const { return basis(k).size() - rank_d(k) - rank_d(k - 1); }
};

inline Exterior iwasawa_oracle() {
  Exterior e;
  e.n = 6;
  e.d.resize(6);
  e.d[4] = {{0, 2, 1}, {1, 3, -1}};
  e.d[5] = {{1, 2, 1}, {0, 3, 1}};
  return e;
}

inline Exterior heisenberg_squared_oracle() {
  Exterior e;
  e.n = 6;
  e.d.resize(6);
  e.d[2] = {{0, 1, 1}};
  e.d[5] = {{3, 4, 1}};
  return e;
}

}  // namespace support
