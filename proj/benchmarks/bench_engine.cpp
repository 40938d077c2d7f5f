#include <benchmark/benchmark.h>

#include "evident/acceptance.hpp"
#include "evident/default_logic.hpp"
#include "evident/logic.hpp"
#include "evident/scenarios.hpp"

namespace {

using namespace evident;

Scenario lottery(std::size_t n) {
  ScenarioRequest r;
  r.name = "lottery";
  r.lottery_size = n;
  return build_scenario(r);
}

Scenario measurement(std::size_t count) {
  ScenarioRequest r;
  r.name = "measurement";
  r.measurement.count = count;
  return build_scenario(r);
}

void BM_CompileLottery(benchmark::State& state) {
  const Scenario s = lottery(static_cast<std::size_t>(state.range(0)));
  const Theory& theory = s.stages.front().base.certain_theory();
  LogicOptions options;
  options.atom_budget = 1 << 20;
  for (auto _ : state) benchmark::DoNotOptimize(CompiledTheory::compile(theory, options));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CompileLottery)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_LotteryEntailment(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Scenario s = lottery(n);
  const auto& compiled = s.stages.front().base.compiled();
  const Formula all_lose = s.universe.back();
  for (auto _ : state) benchmark::DoNotOptimize(compiled.entails(Formula::negation(all_lose)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LotteryEntailment)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_LotteryJudgeUniverse(benchmark::State& state) {
  const Scenario s = lottery(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(judge_universe(s.stages.front().base, s.level, s.universe, 1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LotteryJudgeUniverse)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_MeasurementCorpusReport(benchmark::State& state) {
  const Scenario s = measurement(static_cast<std::size_t>(state.range(0)));
  const auto& base = s.stages.front().base;
  const Corpus corpus = accepted_set(base, s.level, s.universe, {}, 1);
  ReportOptions options;
  options.core_limit = 0;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(corpus_report(base, corpus, s.universe, options));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MeasurementCorpusReport)->RangeMultiplier(10)->Range(100, 10000)->Unit(benchmark::kMillisecond);

void BM_LotteryCore(benchmark::State& state) {
  const Scenario s = lottery(static_cast<std::size_t>(state.range(0)));
  const auto& base = s.stages.front().base;
  const Corpus corpus = accepted_set(base, s.level, s.universe, {}, 1);
  const auto members = corpus.sentences();
  for (auto _ : state)
    benchmark::DoNotOptimize(minimal_inconsistent_subsets(members, 1, base.options(), base.certain_theory()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LotteryCore)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond)->Complexity();

void BM_LotteryExtensions(benchmark::State& state) {
  const Scenario s = lottery(static_cast<std::size_t>(state.range(0)));
  const DefaultTheory theory = *s.default_theory();
  for (auto _ : state) benchmark::DoNotOptimize(compute_extensions(theory));
}
BENCHMARK(BM_LotteryExtensions)->DenseRange(2, 8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
