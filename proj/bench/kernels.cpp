// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include "wordform/formula/compiled.hpp"
#include "wordform/formula/stabilizer.hpp"
#include "wordform/word/construct.hpp"
#include "wordform/word/var_action.hpp"
#include "wordform/word/word.hpp"

using namespace wordform;

namespace {

struct Fixture {
  std::shared_ptr<const PermGroup> g = PermGroup::symmetric(3);
  std::size_t k = 3;
  Formula f = build_exact({3, 3, 1, Polarity::sigma, 0, 0});
  WordDomain omega{g, 3};
  std::shared_ptr<const WordAction> action = WordAction::make(ActionKind::left_right, g, 3);
};

const Fixture& fixture() {
  static const Fixture fx;
  return fx;
}

void BM_truth_table_serial(benchmark::State& state) {
  const auto& fx = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(truth_table_serial(fx.f, fx.omega));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fx.omega.size()));
}

void BM_truth_table(benchmark::State& state) {
  const auto& fx = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(truth_table(fx.f, fx.omega));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fx.omega.size()));
}

void BM_semantic_stabilizer_serial(benchmark::State& state) {
  const auto& fx = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(semantic_stabilizer_serial(fx.f, *fx.action, fx.omega));
}

void BM_semantic_stabilizer(benchmark::State& state) {
  const auto& fx = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(semantic_stabilizer(fx.f, *fx.action, fx.omega));
}

void BM_syntactic_stabilizer_serial(benchmark::State& state) {
  const auto& fx = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(syntactic_stabilizer_serial(fx.f, *fx.action));
}

void BM_syntactic_stabilizer(benchmark::State& state) {
  const auto& fx = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(syntactic_stabilizer(fx.f, *fx.action));
}

}  // namespace

BENCHMARK(BM_truth_table_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_truth_table)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_semantic_stabilizer_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_semantic_stabilizer)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_syntactic_stabilizer_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_syntactic_stabilizer)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
