#include <benchmark/benchmark.h>

#include "noc/construct.hpp"
#include "noc/count.hpp"
#include "noc/search.hpp"
#include "noc/verify.hpp"

namespace {

void BM_s_count_long(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(noc::s_count(3, 3, 2, n));
}
BENCHMARK(BM_s_count_long)->Arg(200)->Arg(1000)->Arg(5000);

void BM_series_coefficients(benchmark::State& state) {
  const auto series = noc::vcal_gf(2, 2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(series.coefficients(state.range(0)));
}
BENCHMARK(BM_series_coefficients)->Arg(100)->Arg(1000);

void BM_table_column(benchmark::State& state) {
  for (auto _ : state) {
    noc::BigInt best = 0;
    for (unsigned k = 1; k < 16; ++k)
      for (unsigned i_size = 1; i_size < 6; ++i_size)
        best = std::max(best, noc::s_count(i_size, 6 - i_size, k, 16));
    benchmark::DoNotOptimize(best);
  }
}
BENCHMARK(BM_table_column);

void BM_construction_i_prime(benchmark::State& state) {
  const noc::Bipartition bp = noc::Bipartition::canonical(noc::Alphabet(3), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(noc::construction_i_prime(state.range(0), bp, 2).size());
}
BENCHMARK(BM_construction_i_prime)->Arg(8)->Arg(10)->Arg(12);

void BM_verifier(benchmark::State& state) {
  const noc::Code code =
      noc::construction_i_prime(state.range(0), noc::Bipartition::canonical(noc::Alphabet(3), 1), 2);
  for (auto _ : state) benchmark::DoNotOptimize(noc::is_non_overlapping(code));
}
BENCHMARK(BM_verifier)->Arg(8)->Arg(10);

void BM_avoiding_bruteforce(benchmark::State& state) {
  const noc::Code code = noc::construction_i(5, noc::Alphabet(2), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(noc::avoiding_count_bruteforce(code, state.range(0)));
}
BENCHMARK(BM_avoiding_bruteforce)->Arg(10)->Arg(14);

void BM_max_code_search(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(noc::max_code_exhaustive(state.range(0), noc::Alphabet(2)).max_size);
}
BENCHMARK(BM_max_code_search)->Arg(6)->Arg(7)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
