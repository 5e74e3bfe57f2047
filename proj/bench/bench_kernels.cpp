// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "rlx/constructors.hpp"
#include "rlx/corpus.hpp"
#include "rlx/enumerate.hpp"
#include "rlx/formula.hpp"
#include "rlx/lifting.hpp"
#include "rlx/theorems.hpp"

namespace {

void BM_enumerate_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rlx::enumerate_algebras_serial(state.range(0)));
}
void BM_enumerate_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rlx::enumerate_algebras(state.range(0)));
}
BENCHMARK(BM_enumerate_serial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_parallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

const rlx::ResiduatedLattice& big() {
  static const auto a = rlx::direct_product(rlx::godel_chain(4), rlx::lukasiewicz_chain(4));
  return a;
}

void BM_lp_report_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rlx::lp_report_serial(big(), rlx::blp_formula()));
}
void BM_lp_report_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rlx::lp_report(big(), rlx::blp_formula()));
}
BENCHMARK(BM_lp_report_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lp_report_parallel)->Unit(benchmark::kMillisecond);

void BM_theorems_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rlx::theorem_checks_serial(big()));
}
void BM_theorems_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rlx::theorem_checks(big()));
}
BENCHMARK(BM_theorems_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_theorems_parallel)->Unit(benchmark::kMillisecond);

void BM_sweep_serial(benchmark::State& state) {
  const auto list = rlx::corpus_up_to(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rlx::sweep_serial(list, rlx::check_theorems));
}
void BM_sweep_parallel(benchmark::State& state) {
  const auto list = rlx::corpus_up_to(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rlx::sweep(list, rlx::check_theorems));
}
BENCHMARK(BM_sweep_serial)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_parallel)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_product_sweep_serial(benchmark::State& state) {
  const auto list = rlx::corpus_up_to(4);
  for (auto _ : state) benchmark::DoNotOptimize(rlx::product_sweep_serial(list));
}
void BM_product_sweep_parallel(benchmark::State& state) {
  const auto list = rlx::corpus_up_to(4);
  for (auto _ : state) benchmark::DoNotOptimize(rlx::product_sweep(list));
}
BENCHMARK(BM_product_sweep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_product_sweep_parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
