// Wall-clock comparison of the serial and OpenMP kernels.
//
//   bench_kernels [size] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "massey/constructions.hpp"
#include "massey/corpus.hpp"
#include "massey/linalg.hpp"
#include "massey/table_algebra.hpp"

using namespace massey;

namespace {

template <class F>
double seconds(F&& f, int repeats) {
  auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) f();
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return dt.count() / repeats;
}

Matrix random_matrix(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  Matrix m(n, n + n / 2);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = FieldElement(Rational(num(rng), den(rng)));
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = argc > 1 ? std::stoul(argv[1]) : 60;
  int repeats = argc > 2 ? std::stoi(argv[2]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());

  std::mt19937 rng(7);
  Matrix m = random_matrix(n, rng);
  EchelonForm s, p;
  double ts = seconds([&] { s = serial::row_reduce(m); }, repeats);
  double tp = seconds([&] { p = parallel::row_reduce(m); }, repeats);
  std::printf("row_reduce %zux%zu   serial %.4fs   parallel %.4fs   speedup %.2f   agree %s\n", m.rows(), m.cols(), ts,
              tp, ts / tp, s.reduced == p.reduced && s.pivots == p.pivots ? "yes" : "NO");

  auto alg = build("quadruple");
  for (int top : {14, 18}) {
    TableData a, b;
    double us = seconds([&] { a = serial::tabulate(*alg, top); }, 1);
    double up = seconds([&] { b = parallel::tabulate(*alg, top); }, 1);
    std::printf("tabulate quadruple to degree %d   serial %.4fs   parallel %.4fs   speedup %.2f   agree %s\n", top, us,
                up, us / up, a.products == b.products && a.differential == b.differential ? "yes" : "NO");
  }
  return 0;
}
