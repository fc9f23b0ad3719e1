#include <benchmark/benchmark.h>

#include <random>

#include "strandlab/bgg.hpp"
#include "strandlab/linalg.hpp"
#include "strandlab/problem.hpp"
#include "strandlab/resolution.hpp"
#include "strandlab/sparse.hpp"

using namespace strandlab;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, int density, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> val(-4, 4), keep(0, density);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng) == 0) m(i, j) = f.from_int(val(rng));
  return m;
}

const Problem& excor() {
  static const Problem p = load_problem(STRANDLAB_DATA "/excor.txt", Field::prime(32003));
  return p;
}

void rref_with(benchmark::State& state, Exec exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(Field::prime(32003), n, n, 1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(rref(a, exec).pivots.size());
}

void BM_RrefSerial(benchmark::State& state) { rref_with(state, Exec::serial); }
void BM_RrefParallel(benchmark::State& state) { rref_with(state, Exec::parallel); }

void BM_DenseRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(Field::prime(32003), n, n, 20, 9);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}

void BM_SparseRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SparseMatrix a(random_matrix(Field::prime(32003), n, n, 20, 9));
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}

void BM_ResolveExcor(benchmark::State& state) {
  const PresentedModule m(excor().presentation);
  for (auto _ : state) benchmark::DoNotOptimize(free_resolution(m.presentation()).complex.size());
}

void BM_LinearPartExcor(benchmark::State& state) {
  const GradedComplex f = free_resolution(PresentedModule(excor().presentation).presentation()).complex;
  for (auto _ : state) benchmark::DoNotOptimize(strongly_linear_part(f, state.range(0)).size());
}

}  // namespace

BENCHMARK(BM_RrefSerial)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefParallel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DenseRank)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SparseRank)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResolveExcor)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinearPartExcor)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
