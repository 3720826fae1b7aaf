#include <benchmark/benchmark.h>

#include "crn/corpus.hpp"
#include "crn/factorize.hpp"
#include "crn/network.hpp"

namespace {

void BM_Factorize(benchmark::State& state, const char* name) {
  auto net = crn::corpus_network(name);
  for (auto _ : state) benchmark::DoNotOptimize(crn::pnd_factorize(net.gamma));
}

void BM_Classify(benchmark::State& state, const char* name) {
  auto net = crn::corpus_network(name);
  for (auto _ : state) benchmark::DoNotOptimize(crn::classify(net));
}

void BM_ClassifyProcessive(benchmark::State& state) {
  auto net = crn::parse_network(crn::processive_phosphorylation_text(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(crn::classify(net));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Factorize, competitive_binding, "competitive_binding");
BENCHMARK_CAPTURE(BM_Factorize, rkip, "rkip");
BENCHMARK_CAPTURE(BM_Classify, rkip, "rkip");
BENCHMARK_CAPTURE(BM_Classify, electron_transfer, "electron_transfer");
BENCHMARK(BM_ClassifyProcessive)->DenseRange(2, 8, 2)->Complexity();
