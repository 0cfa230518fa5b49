#include <benchmark/benchmark.h>

#include <vector>

#include "resir/bench.hpp"
#include "resir/changepoint.hpp"
#include "resir/densities.hpp"
#include "resir/rng.hpp"
#include "resir/sir.hpp"

namespace {

using namespace resir;

void BM_NextUniform(benchmark::State& state) {
  RngStream stream(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stream.next_uniform());
  }
}
BENCHMARK(BM_NextUniform);

void BM_ChildDerivation(benchmark::State& state) {
  const RngStream master(1);
  std::uint64_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(master.child(++k));
  }
}
BENCHMARK(BM_ChildDerivation);

void BM_BuildPool(benchmark::State& state) {
  const auto target = make_beta_target(2.0, 3.0);
  const auto proposal = make_uniform_proposal(0.0, 1.0);
  const auto pool_size = static_cast<std::size_t>(state.range(0));
  RngStream stream(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_pool(target, proposal, pool_size, stream));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pool_size));
}
BENCHMARK(BM_BuildPool)->Arg(2000)->Arg(20000);

void BM_InverseCdfIndex(benchmark::State& state) {
  const auto target = make_beta_target(2.0, 3.0);
  const auto proposal = make_uniform_proposal(0.0, 1.0);
  RngStream stream(7);
  const auto pool =
      build_pool(target, proposal, static_cast<std::size_t>(state.range(0)), stream);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pool.index_from_uniform(stream.next_uniform()));
  }
}
BENCHMARK(BM_InverseCdfIndex)->Arg(1000)->Arg(20000)->Arg(200000);

void BM_Resample(benchmark::State& state) {
  const auto target = make_beta_target(2.0, 3.0);
  const auto proposal = make_uniform_proposal(0.0, 1.0);
  RngStream stream(7);
  const auto pool = build_pool(target, proposal, 20000, stream);
  const auto scheme = static_cast<ResampleScheme>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(resample(pool, scheme, 1000, stream));
  }
  state.SetLabel(std::string(to_string(scheme)));
}
BENCHMARK(BM_Resample)
    ->Arg(static_cast<int>(ResampleScheme::Plain))
    ->Arg(static_cast<int>(ResampleScheme::Antithetic))
    ->Arg(static_cast<int>(ResampleScheme::LatinHypercube));

void BM_BenchCell(benchmark::State& state) {
  ExperimentConfig config;
  config.target = make_beta_target(2.0, 3.0);
  config.proposal = make_uniform_proposal(0.0, 1.0);
  config.pool_size = 20000;
  config.resample_size = 1000;
  config.replications = static_cast<std::size_t>(state.range(0));
  config.scheme = ResampleScheme::LatinHypercube;
  config.seed = 11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_bench(config));
  }
}
BENCHMARK(BM_BenchCell)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_PosteriorSir(benchmark::State& state) {
  DisasterSeries data;
  data.counts.assign(112, 0);
  for (std::size_t i = 0; i < 40; ++i) data.counts[i] = 3;
  RngStream stream(13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        posterior_sir(data, 1, ResampleScheme::Plain, 5000, 2000, stream));
  }
  state.SetItemsProcessed(state.iterations() * 5000);
}
BENCHMARK(BM_PosteriorSir)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
