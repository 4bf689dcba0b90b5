#include <benchmark/benchmark.h>

#include "gfd/cohomology.hpp"
#include "gfd/dimension.hpp"
#include "gfd/fixtures.hpp"
#include "gfd/normal_form.hpp"
#include "gfd/resolution.hpp"

using namespace gfd;

namespace {

Ring bench_ring(int which) {
  switch (which) {
    case 0: return Ring::zmod(2, 3);
    case 1: return Ring::trunc_poly(3, 3);
    default: return Ring::integers();
  }
}

Matrix random_matrix(FixtureGenerator& gen, int n) {
  Vec e;
  for (int i = 0; i < n * n; ++i) e.push_back(gen.element());
  return Matrix(gen.ring(), n, n, e);
}

}  // namespace

// range(0): ring index, range(1): square size
void BM_NormalForm(benchmark::State& st) {
  FixtureGenerator gen(bench_ring(static_cast<int>(st.range(0))), 17);
  Matrix a = random_matrix(gen, static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(matrix_normal_form(a));
}
// integer entries grow past 64 bits beyond size 8 (ArithmeticOverflow)
BENCHMARK(BM_NormalForm)->ArgsProduct({{0, 1}, {4, 8, 16}})->Args({2, 4})->Args({2, 8});

void BM_DgResolution(benchmark::State& st) {
  FixtureGenerator gen(bench_ring(static_cast<int>(st.range(0))), 23);
  Complex c = gen.nonexact_complex();
  for (auto _ : st) benchmark::DoNotOptimize(dg_projective_resolution(c, c.hi() + 4));
}
BENCHMARK(BM_DgResolution)->DenseRange(0, 2);

void BM_GfdOfComplex(benchmark::State& st) {
  FixtureGenerator gen(bench_ring(static_cast<int>(st.range(0))), 29);
  Complex c = gen.nonexact_complex();
  for (auto _ : st) benchmark::DoNotOptimize(dimension_of_complex(c, DimKind::gfd));
}
BENCHMARK(BM_GfdOfComplex)->DenseRange(0, 2);

void BM_ExtTable(benchmark::State& st) {
  const auto t = static_cast<Theory>(st.range(1));
  FixtureGenerator gen(bench_ring(static_cast<int>(st.range(0))), 31);
  Complex m = gen.nonexact_complex();
  Complex n = Complex::concentrated(gen.module(), 0);
  for (auto _ : st) benchmark::DoNotOptimize(ext_groups(m, n, 0, 4, t));
}
BENCHMARK(BM_ExtTable)->ArgsProduct({{0, 1}, {0, 1, 2}});
BENCHMARK_MAIN();
