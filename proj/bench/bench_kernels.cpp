// Serial reference kernels against their OpenMP versions.
//
//   bench_kernels [--benchmark_filter=...]
//
// Set OMP_NUM_THREADS to vary the parallel side.

#include <benchmark/benchmark.h>

#include <random>

#include "groupcodes/codes.hpp"
#include "groupcodes/kernels.hpp"
#include "groupcodes/parse.hpp"

using namespace groupcodes;

namespace {

FpMatrix random_matrix(Scalar p, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Scalar> d(0, p - 1);
  FpMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

void BM_MatmulSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FpMatrix a = random_matrix(3, n, n, 1), b = random_matrix(3, n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul_serial(a, b));
}

void BM_MatmulParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FpMatrix a = random_matrix(3, n, n, 1), b = random_matrix(3, n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul_parallel(a, b));
}

// A code of dimension k over F_2 with block size 2 and length 2k.
void BM_MinWeightSerial(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const FpMatrix basis = row_space(random_matrix(2, k, 4 * k, 3));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::min_block_weight_serial(basis, 2));
}

void BM_MinWeightParallel(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const FpMatrix basis = row_space(random_matrix(2, k, 4 * k, 3));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::min_block_weight_parallel(basis, 2));
}

// Every idempotent of F_16 C_4 (2^16 candidates).
const GroupAlgebraPtr& scan_ambient() {
  static const GroupAlgebraPtr kg = GroupAlgebra::create(parse_field("q=2,m=4"), parse_group("cyclic:4"));
  return kg;
}

void BM_ScanSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_idempotents_serial(scan_ambient()));
}

void BM_ScanParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_idempotents(scan_ambient()));
}

}  // namespace

BENCHMARK(BM_MatmulSerial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatmulParallel)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinWeightSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinWeightParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
