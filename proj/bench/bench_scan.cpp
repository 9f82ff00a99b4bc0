#include <benchmark/benchmark.h>

#include "iwc/search.hpp"

using namespace iwc;

namespace {

void find_matrix_g41(benchmark::State& state) {
  auto src = catalog_get("2g2.1").tensor;
  SearchOptions o;
  o.parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto r = find_matrix(src, "g4.1", Signature({3, 2, 1, 1}), o);
    benchmark::DoNotOptimize(r.index);
  }
}

void find_matrix_exhausted(benchmark::State& state) {
  auto src = catalog_get("2g2.1").tensor;
  SearchOptions o;
  o.restarts = 256;
  o.parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto r = find_matrix(src, "g1+g3.2", Signature({1, 2, 2, 0}), o);
    benchmark::DoNotOptimize(r.restarts_used);
  }
}

void scan_so3(benchmark::State& state) {
  ScanOptions o;
  o.real = true;
  o.search.parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto r = minimality_scan("so3", "heisenberg3", 2, o);
    benchmark::DoNotOptimize(r.entries.size());
  }
}

}  // namespace

BENCHMARK(find_matrix_g41)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(find_matrix_exhausted)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(scan_so3)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
