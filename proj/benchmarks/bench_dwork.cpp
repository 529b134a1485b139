#include <benchmark/benchmark.h>

#include "dwork/gamma.hpp"

namespace {

void BM_gamma_complex(benchmark::State& state) {
  dwork::Prec p = state.range(0);
  dwork::BigComplex z(dwork::BigFloat(dwork::rat(7, 5), p), dwork::BigFloat(dwork::rat(1, 3), p));
  for (auto _ : state) benchmark::DoNotOptimize(dwork::gamma(z, p));
}
BENCHMARK(BM_gamma_complex)->Arg(256)->Arg(512)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
