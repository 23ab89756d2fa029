// Times the parallel elimination kernel against the serial reference on
// synthetic rational matrices and on derivation-space solves of random
// evolution algebras. Results must agree entry for entry; the timings show
// what the OpenMP sweep buys on larger systems.
//
//   evoalg_bench [max_side]

#include <evoalg/algebra.hpp>
#include <evoalg/derivations.hpp>
#include <evoalg/linalg.hpp>
#include <evoalg/sampling.hpp>

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>

using namespace evoalg;

namespace {

double seconds(const std::function<void()>& work) {
  const auto start = std::chrono::steady_clock::now();
  work();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

RatMatrix random_matrix(SmallRatSampler& sampler, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = sampler.next(3);
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t max_side = 120;
  if (argc > 1) max_side = std::strtoul(argv[1], nullptr, 10);
  std::cout << "threads: " << omp_get_max_threads() << "\n\n";

  std::cout << "rref on random rational matrices (rows x cols, seconds)\n";
  std::cout << "size          parallel    serial     speedup\n";
  SmallRatSampler sampler(2024);
  for (std::size_t side = 60; side <= max_side; side *= 2) {
    RatMatrix m = random_matrix(sampler, side, side + side / 2);
    Echelon parallel_result, serial_result;
    const double tp = seconds([&] { parallel_result = rref(m); });
    const double ts = seconds([&] { serial_result = linalg_reference::rref(m); });
    const bool same =
        parallel_result.mat == serial_result.mat && parallel_result.pivots == serial_result.pivots;
    std::printf("%4zu x %-6zu %9.3f %9.3f %9.2fx  %s\n", side, side + side / 2, tp, ts,
                ts / tp, same ? "identical" : "MISMATCH");
    if (!same) return 1;
  }

  std::cout << "\nderivation space of random evolution algebras (dim, seconds)\n";
  for (std::size_t dim : {8, 12, 16}) {
    RatMatrix structure(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) structure.at(r, c) = sampler.next(2);
    EvolutionAlgebra e(std::move(structure));
    Subspace space(1);
    const double t = seconds([&] { space = derivation_space(e); });
    std::printf("dim %2zu: %7.3f s  (dim D = %zu)\n", dim, t, space.dim());
  }
  return 0;
}
