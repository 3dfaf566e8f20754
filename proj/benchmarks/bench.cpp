#include <benchmark/benchmark.h>

#include <random>

#include "omegav/forms.hpp"
#include "omegav/matrix.hpp"
#include "omegav/rep.hpp"
#include "omegav/surface.hpp"

using namespace omegav;

namespace {

Matrix random_invertible(PrimeField F, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, F.modulus() - 1);
  for (;;) {
    Matrix m(F, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, d(rng));
    if (determinant(m) != 0) return m;
  }
}

void BM_determinant(benchmark::State& state) {
  PrimeField F(101);
  std::mt19937_64 rng(1);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_invertible(F, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_determinant)->Arg(8)->Arg(16)->Arg(32);

void BM_spinor_norm(benchmark::State& state) {
  PrimeField F(11);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  BilinearSpace V = BilinearSpace::identity_form(F, n);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::uint64_t> d(0, 10);
  Matrix g = Matrix::identity(F, n);
  for (int k = 0; k < 4; ++k) {
    Vector v(n);
    do
      for (auto& x : v) x = d(rng);
    while (V.norm(v) == 0);
    g = g * reflection(v, V);
  }
  for (auto _ : state) benchmark::DoNotOptimize(spinor_norm(g, V));
}
BENCHMARK(BM_spinor_norm)->Arg(4)->Arg(6)->Arg(8);

void BM_invariant_subspaces(benchmark::State& state) {
  PrimeField F(5);
  Matrix c = c_infinity(4, F);
  RepImage rep({c}, c, BilinearSpace::identity_form(F, 4));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_subspaces(rep));
}
BENCHMARK(BM_invariant_subspaces);

void BM_surface_report(benchmark::State& state) {
  SurfaceConfig c = builtin_case(BuiltinCase::Case3O, 3, 2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(surface_report(c));
}
BENCHMARK(BM_surface_report);

}  // namespace

BENCHMARK_MAIN();
