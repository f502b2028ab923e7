// Serial reference against the OpenMP kernels. Set OMP_NUM_THREADS to vary
// the thread count.

#include <benchmark/benchmark.h>

#include "csf/samplers.hpp"
#include "csf/stable.hpp"
#include "csf/symfunc.hpp"

namespace {

csf::Graph bench_graph(std::int64_t id) {
  switch (id) {
    case 0: return csf::gen_squid(4);
    case 1: return csf::gen_squid(5);
    case 2: return csf::incomparability_graph(csf::gen_boolean_lattice(4));
    default: {
      csf::Rng rng(static_cast<std::uint64_t>(id));
      return csf::random_graph(14, 40, rng);
    }
  }
}

const char* bench_name(std::int64_t id) {
  switch (id) {
    case 0: return "squid4";
    case 1: return "squid5";
    case 2: return "incB4";
    default: return "gnp14";
  }
}

void BM_CountTypesSerial(benchmark::State& state) {
  const auto g = bench_graph(state.range(0));
  state.SetLabel(bench_name(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(csf::serial::count_types(g));
}

void BM_CountTypesParallel(benchmark::State& state) {
  const auto g = bench_graph(state.range(0));
  state.SetLabel(bench_name(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(csf::count_types(g));
}

void BM_CountOfTypeSerial(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const auto g = csf::gen_squid(n);
  const csf::Partition lambda{n + 1, n - 1, n - 1};
  for (auto _ : state) benchmark::DoNotOptimize(csf::serial::count_of_type(g, lambda));
}

void BM_CountOfTypeParallel(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const auto g = csf::gen_squid(n);
  const csf::Partition lambda{n + 1, n - 1, n - 1};
  for (auto _ : state) benchmark::DoNotOptimize(csf::count_of_type(g, lambda));
}

const std::vector<unsigned> kAlpha{2, 2, 1, 1, 1};

void BM_OracleSerial(benchmark::State& state) {
  const auto g = csf::gen_cycle(7);
  for (auto _ : state) benchmark::DoNotOptimize(csf::serial::coloring_distribution_oracle(g, kAlpha));
}

void BM_OracleParallel(benchmark::State& state) {
  const auto g = csf::gen_cycle(7);
  for (auto _ : state) benchmark::DoNotOptimize(csf::coloring_distribution_oracle(g, kAlpha));
}

}  // namespace

BENCHMARK(BM_CountTypesSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountTypesParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountOfTypeSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountOfTypeParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
