#include <benchmark/benchmark.h>

#include "eigenbound/correction.hpp"
#include "eigenbound/oracle.hpp"
#include "eigenbound/profile.hpp"
#include "eigenbound/universal.hpp"

using namespace eigenbound;

namespace {

Alpha bench_alpha(int64_t code) { return Alpha::from_signed(static_cast<double>(code) / 100.0); }

void BM_Profile(benchmark::State& state) {
  const Alpha a = bench_alpha(state.range(0));
  for (auto _ : state) {
    CoefficientProfile p(5, a);
    benchmark::DoNotOptimize(p.samples());
  }
}
BENCHMARK(BM_Profile)->Arg(-200)->Arg(100)->Arg(157)->Unit(benchmark::kMillisecond);

void BM_Delta1Star(benchmark::State& state) {
  const CoefficientProfile p(5, bench_alpha(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(delta1_star(p).value);
}
BENCHMARK(BM_Delta1Star)->Arg(-200)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Bracket(benchmark::State& state) {
  const CoefficientProfile p(5, bench_alpha(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(delta_bracket(p).lower_for_barlambda);
}
BENCHMARK(BM_Bracket)->Arg(-200)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const Alpha a = bench_alpha(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bar_lambda(5, a).lambda);
}
BENCHMARK(BM_Oracle)->Arg(-200)->Arg(100)->Arg(157)->Unit(benchmark::kMillisecond);

void BM_IterateUpper(benchmark::State& state) {
  const CoefficientProfile p(3, Alpha{});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iterate_upper(p, n).upper_sequence.back());
}
BENCHMARK(BM_IterateUpper)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_MAlpha(benchmark::State& state) {
  const Alpha a = bench_alpha(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(m_alpha(a));
}
BENCHMARK(BM_MAlpha)->Arg(-600)->Arg(150)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
