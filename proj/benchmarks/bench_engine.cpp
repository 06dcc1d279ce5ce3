#include <benchmark/benchmark.h>

#include "proxima/proxima.hpp"

namespace {

proxima::GeneratedInstance make(std::int64_t a_size, proxima::MetricKind kind) {
  proxima::GeneratorConfig cfg;
  cfg.seed = 42;
  cfg.alpha_target = 0.7;
  cfg.a_size = static_cast<std::size_t>(a_size);
  cfg.b_size = cfg.a_size;
  cfg.dimension = 3;
  cfg.space_kind = kind;
  return proxima::generate_instance(cfg);
}

void BM_Generate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(make(state.range(0), proxima::MetricKind::euclidean));
  }
}
BENCHMARK(BM_Generate)->Arg(50)->Arg(200)->Arg(1000);

void BM_ProximalSubsets(benchmark::State& state) {
  const auto gen = make(state.range(0), proxima::MetricKind::euclidean);
  const auto& inst = gen.instance;
  for (auto _ : state) {
    benchmark::DoNotOptimize(proxima::proximal_subsets(inst.pair, inst.tolerances.eps_prox));
  }
}
BENCHMARK(BM_ProximalSubsets)->Arg(50)->Arg(200)->Arg(1000);

void BM_CertifyContraction(benchmark::State& state) {
  const auto gen = make(state.range(0), proxima::MetricKind::euclidean);
  const auto& inst = gen.instance;
  const auto geom = proximal_subsets(inst.pair, inst.tolerances.eps_prox);
  const auto s = build_induced_map(geom, inst.map);
  for (auto _ : state) benchmark::DoNotOptimize(proxima::certify_contraction(inst.pair, s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CertifyContraction)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

void BM_BanachVsDirect(benchmark::State& state) {
  const bool direct = state.range(1) != 0;
  const auto gen = make(state.range(0), proxima::MetricKind::explicit_matrix);
  const auto& inst = gen.instance;
  const auto geom = proximal_subsets(inst.pair, inst.tolerances.eps_prox);
  const auto s = build_induced_map(geom, inst.map);
  proxima::IterationOptions opt;
  opt.alpha = certify_contraction(inst.pair, s).alpha_hat;
  for (auto _ : state) {
    for (std::size_t x0 : geom.a0) {
      if (direct) {
        benchmark::DoNotOptimize(direct_iterate(inst.pair, geom, inst.map, x0, opt));
      } else {
        benchmark::DoNotOptimize(banach_iterate(inst.pair, geom, inst.map, s, x0, opt));
      }
    }
  }
}
BENCHMARK(BM_BanachVsDirect)->ArgsProduct({{50, 200}, {0, 1}});

}  // namespace

BENCHMARK_MAIN();
