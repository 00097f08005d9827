#include <benchmark/benchmark.h>

#include "stoprank/corpus.hpp"
#include "stoprank/fitting.hpp"
#include "stoprank/selection_model.hpp"
#include "stoprank/stoplists.hpp"

using namespace stoprank;

namespace {

const std::string& moby_text() {
  static const std::string text = load_text(std::filesystem::path(STOPRANK_CORPUS_DIR) / "moby_dick.txt", true);
  return text;
}

const RankFrequencyTable& moby_table() {
  static const RankFrequencyTable t = rank(count_tokens(tokenize(moby_text())));
  return t;
}

void BM_Tokenize(benchmark::State& state) {
  const auto& text = moby_text();
  for (auto _ : state) benchmark::DoNotOptimize(tokenize(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Tokenize)->Unit(benchmark::kMillisecond);

void BM_CountAndRank(benchmark::State& state) {
  const auto tokens = tokenize(moby_text());
  for (auto _ : state) benchmark::DoNotOptimize(rank(count_tokens(tokens)));
}
BENCHMARK(BM_CountAndRank)->Unit(benchmark::kMillisecond);

void BM_FitMandelbrot(benchmark::State& state) {
  const auto input = FitInput::from_table(moby_table());
  for (auto _ : state) benchmark::DoNotOptimize(fit_mandelbrot(input));
}
BENCHMARK(BM_FitMandelbrot)->Unit(benchmark::kMillisecond);

void BM_FitHill(benchmark::State& state) {
  const auto parts = partition(moby_table(), bundled("common123"));
  for (auto _ : state) benchmark::DoNotOptimize(fit_hill(parts.stopword_mapping));
}
BENCHMARK(BM_FitHill)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  const SyntheticZipfPopulation pop(static_cast<std::uint64_t>(state.range(0)), 1.07, 20000);
  const HillParams hp(86, 2.3);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_subset(pop, hp, SelectionMode::complement));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(15000)->Arg(1000000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
