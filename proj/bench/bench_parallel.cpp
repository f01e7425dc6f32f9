#include <benchmark/benchmark.h>

#include "braid/pipeline.hpp"

using namespace braid;

namespace {

std::unique_ptr<Pipeline> prepared(const char* g, int n) {
  PipelineOptions o;
  o.n = n;
  return prepare(g, o);
}

void enumerate_cells(benchmark::State& st, const char* g, int n, bool parallel) {
  auto p = prepared(g, n);
  for (auto _ : st) benchmark::DoNotOptimize(p->cells->enumerate(100'000'000, parallel));
}

void build(benchmark::State& st, const char* g, int n, bool parallel) {
  PipelineOptions o;
  o.n = n;
  o.parallel = parallel;
  auto p = prepare(g, o);
  for (auto _ : st) {
    build_complex(*p, o);
    benchmark::DoNotOptimize(p->complex.counts());
  }
}

}  // namespace

BENCHMARK_CAPTURE(enumerate_cells, K5_n4_serial, "K5", 4, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(enumerate_cells, K5_n4_parallel, "K5", 4, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(enumerate_cells, K(4,4)_n3_serial, "K(4,4)", 3, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(enumerate_cells, K(4,4)_n3_parallel, "K(4,4)", 3, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(build, K5_n4_serial, "K5", 4, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(build, K5_n4_parallel, "K5", 4, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(build, K(4,4)_n3_serial, "K(4,4)", 3, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(build, K(4,4)_n3_parallel, "K(4,4)", 3, true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
