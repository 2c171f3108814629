#include <benchmark/benchmark.h>

#include "gkoszul/audit.hpp"
#include "gkoszul/koszul_q.hpp"
#include "gkoszul/resolution.hpp"
#include "gkoszul/ring.hpp"
#include "gkoszul/series_checks.hpp"

using namespace gkoszul;

namespace {

Algebra compressed24() {
  ConstructResult r = construct_compressed(2, 4, 101, 1);
  return std::move(*r.alg);
}

void BM_build_compressed(benchmark::State& state) {
  for (auto _ : state) {
    ConstructResult r =
        construct_compressed(2, state.range(0), 101, 1);
    benchmark::DoNotOptimize(r.alg);
  }
}
BENCHMARK(BM_build_compressed)->Arg(4)->Arg(6);

void BM_resolve_k(benchmark::State& state) {
  Algebra a = compressed24();
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MinimalResolution res = resolve_module(module_k(a), depth);
    benchmark::DoNotOptimize(res.f);
  }
}
BENCHMARK(BM_resolve_k)->Arg(4)->Arg(6)->Arg(8);

void BM_tor_q_series(benchmark::State& state) {
  Algebra a = compressed24();
  for (auto _ : state) {
    ZSeries s = tor_q_series(module_R(a), 8);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_tor_q_series);

void BM_golod_hom_check(benchmark::State& state) {
  Algebra a = compressed24();
  for (auto _ : state) {
    InstanceContext ctx(a);
    SeriesCheck c = golod_hom_check(ctx, 3, 6);
    benchmark::DoNotOptimize(c.pass);
  }
}
BENCHMARK(BM_golod_hom_check);

void BM_audit_k2(benchmark::State& state) {
  Algebra a = compressed24();
  for (auto _ : state) {
    InstanceContext ctx(a);
    AuditReport rep = audit_theorem_k2(ctx, 3, 6);
    benchmark::DoNotOptimize(rep.pass);
  }
}
BENCHMARK(BM_audit_k2);

}  // namespace

BENCHMARK_MAIN();
