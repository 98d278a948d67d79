#include "liebasis/poly_matrix.hpp"
#include "liebasis/realize.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace liebasis;

Polynomial dense_poly(int vars, int degree) {
  Polynomial p = Polynomial::constant(vars, 1);
  for (int axis = 1; axis <= vars; ++axis)
    for (int d = 0; d < degree; ++d)
      p = p + Polynomial::variable(vars, axis) * p;
  return p;
}

void poly_multiply(benchmark::State& state) {
  Polynomial a = dense_poly(3, 3);
  Polynomial b = dense_poly(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(poly_multiply);

void det_4x4(benchmark::State& state) {
  PolyMatrix m(4, 4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      m.at(r, c) = Polynomial::variable(4, (r + c) % 4 + 1);
      if (r == c) m.at(r, c) = m.at(r, c) + Polynomial::constant(4, 1);
    }
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(det_4x4);

void realize_heisenberg5(benchmark::State& state) {
  LieAlgebra L =
      LieAlgebra::from_entries(5, {{1, 3, 5, 1}, {2, 4, 5, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(realize_nilpotent(L));
}
BENCHMARK(realize_heisenberg5);

void realize_sl2(benchmark::State& state) {
  LieAlgebra L = LieAlgebra::from_entries(
      3, {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}});
  for (auto _ : state)
    benchmark::DoNotOptimize(realize_general(L, LeviData{2}, SolvableSplit{1, 1}));
}
BENCHMARK(realize_sl2);

} // namespace

BENCHMARK_MAIN();
