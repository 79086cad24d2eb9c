#include <benchmark/benchmark.h>

#include <cstdint>

#include "qse/amplitude_estimation.hpp"
#include "qse/oracle_machine.hpp"
#include "qse/qipc.hpp"
#include "qse/sampler.hpp"
#include "qse/stream.hpp"
#include "qse/suffix_estimator.hpp"
#include "qse/two_stage.hpp"

namespace {

qse::Stream zipf_stream(std::uint64_t m) {
  qse::GeneratorParams gp;
  gp.m = m;
  gp.n = static_cast<std::uint32_t>(m);
  return qse::generate_stream(qse::StreamKind::zipf, gp, 7);
}

qse::Stream majority_stream(std::uint64_t m) {
  qse::GeneratorParams gp;
  gp.m = m;
  gp.n = 64;
  gp.majority_fraction = 0.75;
  return qse::generate_stream(qse::StreamKind::majority, gp, 7);
}

}  // namespace

static void MajorityScan(benchmark::State& state) {
  auto s = majority_stream(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    auto rep = qse::detect_majority(s);
    benchmark::DoNotOptimize(rep);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(MajorityScan)->RangeMultiplier(8)->Range(1 << 10, 1 << 19);

static void SuffixEntropySweep(benchmark::State& state) {
  auto s = zipf_stream(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    double h = qse::brute_force_entropy(s);
    benchmark::DoNotOptimize(h);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(SuffixEntropySweep)->RangeMultiplier(8)->Range(1 << 10, 1 << 19);

// Full forward+inverse sweep of the reversible counting machine for one
// query position; cost is two passes over the stream.
static void OracleRoundTrip(benchmark::State& state) {
  auto s = zipf_stream(static_cast<std::uint64_t>(state.range(0)));
  std::uint64_t q = s.size() / 2;
  for (auto _ : state) {
    auto out = qse::oracle_run(s, q);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(OracleRoundTrip)->RangeMultiplier(8)->Range(1 << 10, 1 << 19);

// One pass of the support-set permutation tracker over a majority stream.
// Each step rewrites the whole support set, so the pass is quadratic in m;
// the range stays small to keep the default run short.
static void SupportSetPass(benchmark::State& state) {
  auto s = majority_stream(static_cast<std::uint64_t>(state.range(0)));
  auto rep = qse::detect_majority(s);
  for (auto _ : state) {
    auto st = qse::qipc_run(s, rep.candidate, rep.count);
    benchmark::DoNotOptimize(st);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(SupportSetPass)->RangeMultiplier(4)->Range(1 << 10, 1 << 14);

static void SamplerBuild(benchmark::State& state) {
  auto s = zipf_stream(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    auto d = qse::build_sampler(s, qse::SamplerKind::case1_full);
    benchmark::DoNotOptimize(d);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(SamplerBuild)->RangeMultiplier(8)->Range(1 << 10, 1 << 19);

static void OutcomeDistribution(benchmark::State& state) {
  auto grid = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto p = qse::qae_outcome_distribution(0.37, grid);
    benchmark::DoNotOptimize(p);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(OutcomeDistribution)->RangeMultiplier(4)->Range(16, 1 << 12);

// End-to-end pipeline on a skewed stream: majority detection, sampler
// construction, and the median-of-repetitions phase readout.
static void TwoStagePipeline(benchmark::State& state) {
  auto s = zipf_stream(static_cast<std::uint64_t>(state.range(0)));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto rep = qse::run_two_stage(s, 0.1, 0.2, seed++);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(TwoStagePipeline)->RangeMultiplier(4)->Range(1 << 10, 1 << 14);

BENCHMARK_MAIN();
