// Serial reference kernels against the OpenMP table kernels at n = 5.
#include <benchmark/benchmark.h>

#include "indep/operators.hpp"
#include "indep/reference.hpp"

using namespace indep;

namespace {

const TernaryRelation& subject() {
  static const TernaryRelation r = [] {
    SiteSpec spec;
    spec.n = 5;
    spec.closed_sets = {0, 3, 4, 7, 24, 27, 28, 31};
    spec.generators = {{1, 0, 2, 3, 4}, {0, 1, 2, 4, 3}};
    return random_invariant_relation(Site::build(spec), 1, 0.7);
  }();
  return r;
}

template <TernaryRelation (*F)(const TernaryRelation&, Exec), Exec E>
void BM_kernel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(F(subject(), E));
}

template <TernaryRelation (*F)(const TernaryRelation&)>
void BM_reference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(F(subject()));
}

}  // namespace

BENCHMARK(BM_reference<reference::monotonise_M>)->Name("M/reference")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel<monotonise_M, Exec::Serial>)->Name("M/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel<monotonise_M, Exec::Parallel>)->Name("M/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reference<reference::monotonise_m>)->Name("m/reference")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel<monotonise_m, Exec::Serial>)->Name("m/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel<monotonise_m, Exec::Parallel>)->Name("m/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reference<reference::star>)->Name("star/reference")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel<star, Exec::Serial>)->Name("star/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel<star, Exec::Parallel>)->Name("star/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reference<reference::closure_c>)->Name("c/reference")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel<closure_c, Exec::Serial>)->Name("c/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel<closure_c, Exec::Parallel>)->Name("c/parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
