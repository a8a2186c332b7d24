#include <benchmark/benchmark.h>

#include "padicdyn/potts.hpp"

using namespace padicdyn;

namespace {

ModelParams anchor() {
  Prime p(BigInt(5));
  return ModelParams(p, 5, PadicNumber(p, 26), 3);
}

void BM_eval_map(benchmark::State& state) {
  ModelParams params = anchor();
  PadicNumber x(params.p(), BigRat(7, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_map(params, x));
  }
}
BENCHMARK(BM_eval_map);

void BM_hensel_lift(benchmark::State& state) {
  ModelParams params = anchor();
  auto [xf, yf, zf] = fixed_point_cubics(params);
  (void)xf;
  (void)zf;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hensel_lift(yf, 3, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_hensel_lift)->Arg(16)->Arg(64)->Arg(256);

void BM_exp_p(benchmark::State& state) {
  Prime p(BigInt(5));
  PadicNumber x(p, BigRat(25));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exp_p(x, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_exp_p)->Arg(16)->Arg(64);

void BM_cubic_roots(benchmark::State& state) {
  ModelParams params = anchor();
  auto [xf, yf, zf] = fixed_point_cubics(params);
  (void)xf;
  (void)zf;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cubic_roots_Qp(yf, 32));
  }
}
BENCHMARK(BM_cubic_roots);

}  // namespace

BENCHMARK_MAIN();
