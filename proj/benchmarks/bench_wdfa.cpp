#include <benchmark/benchmark.h>

#include "wdfa/codec.hpp"
#include "wdfa/random.hpp"
#include "wdfa/stream.hpp"
#include "wdfa/subset_sampler.hpp"

using namespace wdfa;

namespace {

void BM_subset_pop(benchmark::State& state) {
  const std::uint64_t universe = std::uint64_t{1} << 20;
  const auto take = static_cast<std::uint64_t>(state.range(0));
  Rng rng(1);
  for (auto _ : state) {
    SequentialSubsetSampler s(universe, take, rng);
    std::uint64_t acc = 0;
    while (!s.empty()) acc += s.pop();
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(take));
}
BENCHMARK(BM_subset_pop)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

void BM_stream_generate(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const Params p{n, 8 * n - 1, 128};
  Rng rng(2);
  NullSink sink;
  std::int64_t edges = 0;
  for (auto _ : state) edges += static_cast<std::int64_t>(sample_stream(p, rng, sink).edges);
  state.SetItemsProcessed(edges);
}
BENCHMARK(BM_stream_generate)->Arg(1 << 15)->Arg(1 << 17)->Arg(1 << 19);

void BM_check_wheeler(benchmark::State& state) {
  const Params p{1 << 14, (1 << 17) - 1, 64};
  Rng rng(3);
  VectorSink sink;
  sample_stream(p, rng, sink);
  const WheelerDfa d{p.n, p.sigma, sink.edges()};
  for (auto _ : state) {
    const CheckResult chk = check_wheeler(d);
    benchmark::DoNotOptimize(chk.ok);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(p.m));
}
BENCHMARK(BM_check_wheeler);

void BM_decode(benchmark::State& state) {
  const Params p{1 << 12, (1 << 15) - 1, 32};
  Rng rng(4);
  VectorSink sink;
  sample_stream(p, rng, sink);
  const auto [o, in_vec] = encode(WheelerDfa{p.n, p.sigma, sink.edges()});
  for (auto _ : state) {
    const WheelerDfa d = decode(o, in_vec);
    benchmark::DoNotOptimize(d.transitions.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(p.m));
}
BENCHMARK(BM_decode);

}  // namespace

BENCHMARK_MAIN();
