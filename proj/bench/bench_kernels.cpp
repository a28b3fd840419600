#include <benchmark/benchmark.h>

#include "bwcap/kernels.hpp"
#include "bwcap/perm.hpp"

namespace {

using namespace bwcap;

unsigned jobs_arg(const benchmark::State& state) { return static_cast<unsigned>(state.range(0)); }

void BM_KaryHistogramSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::kary_cell_histogram(5, 9));
}
void BM_KaryHistogramOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::kary_cell_histogram(5, 9, jobs_arg(state)));
}

void BM_PermHistogramSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::perm_cell_histogram(9));
}
void BM_PermHistogramOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::perm_cell_histogram(9, jobs_arg(state)));
}

void BM_CensusSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::perm_displacement_census(9));
}
void BM_CensusOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::perm_displacement_census(9, jobs_arg(state)));
}

StructuredMatrix<BigRational> scalar_matrix(std::size_t n) {
  StructuredMatrix<BigRational> a(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) a(i, j) = make_rational(static_cast<long>(i * 7 + j * 3) % 11 - 5, j + 1);
  return a;
}

void BM_RyserScalarSerial(benchmark::State& state) {
  const auto a = scalar_matrix(12);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::ryser_permanent(a));
}
void BM_RyserScalarOmp(benchmark::State& state) {
  const auto a = scalar_matrix(12);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::ryser_permanent(a, jobs_arg(state)));
}

void BM_RyserPolySerial(benchmark::State& state) {
  const auto m = theorem_matrix(8);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::ryser_permanent(m));
}
void BM_RyserPolyOmp(benchmark::State& state) {
  const auto m = theorem_matrix(8);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::ryser_permanent(m, jobs_arg(state)));
}

}  // namespace

#define BWCAP_JOBS ->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime()

BENCHMARK(BM_KaryHistogramSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KaryHistogramOmp) BWCAP_JOBS;
BENCHMARK(BM_PermHistogramSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermHistogramOmp) BWCAP_JOBS;
BENCHMARK(BM_CensusSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusOmp) BWCAP_JOBS;
BENCHMARK(BM_RyserScalarSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RyserScalarOmp) BWCAP_JOBS;
BENCHMARK(BM_RyserPolySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RyserPolyOmp) BWCAP_JOBS;

BENCHMARK_MAIN();
