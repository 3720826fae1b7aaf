#include <benchmark/benchmark.h>

#include "crn/cone_pipeline.hpp"
#include "crn/corpus.hpp"
#include "crn/verify.hpp"

namespace {

void BM_Integrate(benchmark::State& state, const char* name) {
  auto net = crn::corpus_network(name);
  auto rates = crn::mass_action(net, crn::KineticsSpec::random(net, 42));
  std::vector<double> x0(net.n(), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(crn::integrate(net, rates, x0, 10.0, 1e-3));
  state.SetItemsProcessed(state.iterations() * 10000);
}

void BM_Monotonicity(benchmark::State& state, const char* name) {
  auto net = crn::corpus_network(name);
  auto cc = crn::construct_cone(net, crn::classify(net), crn::FamilyRequest::automatic, false);
  auto rates = crn::mass_action(net, crn::KineticsSpec::random(net, 42));
  for (auto _ : state) benchmark::DoNotOptimize(crn::monotonicity_oracle(net, rates, cc.cone, cc.duals, 100, 42));
}

void BM_Witnesses(benchmark::State& state, const char* name) {
  auto net = crn::corpus_network(name);
  auto cc = crn::construct_cone(net, crn::classify(net), crn::FamilyRequest::automatic, false);
  for (auto _ : state) benchmark::DoNotOptimize(crn::strong_witnesses(net, cc.cone, cc.duals));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Integrate, rkip, "rkip")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Integrate, processive_phosphorylation, "processive_phosphorylation")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Monotonicity, rkip, "rkip")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Monotonicity, processive_phosphorylation, "processive_phosphorylation")
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Witnesses, rkip, "rkip")->Unit(benchmark::kMillisecond);
