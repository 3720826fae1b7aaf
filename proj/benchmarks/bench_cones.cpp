#include <benchmark/benchmark.h>

#include <random>

#include "crn/cone_pipeline.hpp"
#include "crn/corpus.hpp"

namespace {

void BM_ConstructCone(benchmark::State& state, const char* name) {
  auto net = crn::corpus_network(name);
  auto rep = crn::classify(net);
  for (auto _ : state) benchmark::DoNotOptimize(crn::construct_cone(net, rep));
}

// Double description on the lifted cross-polytope of dimension d (2^d facets).
void BM_CrossPolytopeFacets(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::vector<crn::QVector> gens;
  for (std::size_t i = 0; i < d; ++i)
    for (long s : {1L, -1L}) {
      crn::QVector g(d + 1);
      g[i] = s;
      g[d] = 1;
      gens.push_back(g);
    }
  for (auto _ : state) benchmark::DoNotOptimize(crn::cone_facets(gens));
}

void BM_ExtremePoints(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> ent(-6, 6);
  std::vector<crn::QVector> pts(static_cast<std::size_t>(state.range(0)), crn::QVector(4));
  for (auto& p : pts)
    for (auto& x : p) x = ent(rng);
  for (auto _ : state) benchmark::DoNotOptimize(crn::extreme_points(pts));
}

void BM_Gauge(benchmark::State& state, const char* name) {
  auto net = crn::corpus_network(name);
  auto cc = crn::construct_cone(net, crn::classify(net));
  auto basis = crn::stoichiometric_basis(net);
  std::vector<double> x(net.n(), 0.0);
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += (0.3 + 0.1 * double(b)) * basis[b][i].get_d();
  for (auto _ : state) benchmark::DoNotOptimize(crn::gauge(*cc.ball, x));
}

}  // namespace

BENCHMARK_CAPTURE(BM_ConstructCone, pcr_annealing, "pcr_annealing")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ConstructCone, rkip, "rkip")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ConstructCone, processive_phosphorylation, "processive_phosphorylation")
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossPolytopeFacets)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtremePoints)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Gauge, rkip, "rkip");
BENCHMARK_CAPTURE(BM_Gauge, processive_phosphorylation, "processive_phosphorylation");
