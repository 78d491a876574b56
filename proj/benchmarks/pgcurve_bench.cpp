#include <benchmark/benchmark.h>

#include "pgcurve/aw.hpp"
#include "pgcurve/bertrand.hpp"
#include "pgcurve/equiform.hpp"
#include "pgcurve/frenet.hpp"
#include "pgcurve/zoo.hpp"

using namespace pgcurve;

namespace {

CurveJet curve(bool sampled) {
  const auto e = get_example("timelike_general_helix", 1, 2);
  return sampled ? make_sampled_curve(e.position, e.domain) : e.curve;
}

void BM_FrenetData(benchmark::State& state) {
  const auto c = curve(state.range(0) != 0);
  double s = 0.3;
  for (auto _ : state) benchmark::DoNotOptimize(frenet_data(c, s));
}

void BM_EquiformData(benchmark::State& state) {
  const auto c = curve(state.range(0) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(equiform_data(c, 0.3));
}

void BM_Classify(benchmark::State& state) {
  const auto c = curve(state.range(0) != 0);
  const auto grid = linspace(0, 2, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(c, grid));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_EquiformParameter(benchmark::State& state) {
  const auto c = curve(false);
  for (auto _ : state) benchmark::DoNotOptimize(equiform_parameter(c, 0, 2));
}

void BM_BertrandVerify(benchmark::State& state) {
  const auto bf = bertrand_fixture(1, 1);
  const auto mate = bertrand_mate(bf.curve, 1.0);
  const auto grid = linspace(-1, 1, 101);
  for (auto _ : state) benchmark::DoNotOptimize(verify_bertrand_pair(bf.curve, mate, grid, 1e-8));
}

}  // namespace

BENCHMARK(BM_FrenetData)->ArgName("sampled")->Arg(0)->Arg(1);
BENCHMARK(BM_EquiformData)->ArgName("sampled")->Arg(0)->Arg(1);
BENCHMARK(BM_Classify)->ArgNames({"sampled", "points"})->Args({0, 101})->Args({1, 101})->Args({0, 1001});
BENCHMARK(BM_EquiformParameter);
BENCHMARK(BM_BertrandVerify);

BENCHMARK_MAIN();
