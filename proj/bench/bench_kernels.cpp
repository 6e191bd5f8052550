// Serial reference versus OpenMP kernels on the workloads the unions
// profile and the elasticity scan generate.

#include <benchmark/benchmark.h>

#include "factorlab/kernels.hpp"
#include "factorlab/presentation.hpp"

namespace {

  using factorlab::BudgetPolicy;
  using factorlab::Presentation;
  using factorlab::Word;

  Presentation m1() {
    return factorlab::parse_presentation("gens: x y z\nrel: x y = y z x\n");
  }

  Presentation m3() {
    return factorlab::parse_presentation(
        "gens: u v x y\nrel: u u = v v v\nrel: x y = y y x\n");
  }

  std::vector<Word> seeds(Presentation const& p, std::size_t k) {
    std::vector<factorlab::Letter> alphabet;
    for (auto const& g : p.generators()) {
      alphabet.push_back(g.id);
    }
    return factorlab::words_of_length(alphabet, k);
  }

  void BM_LengthSetsSerial(benchmark::State& state) {
    auto p = m1();
    auto s = seeds(p, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(
          factorlab::kernels::length_sets_serial(s, p, BudgetPolicy{}));
    }
    state.SetItemsProcessed(state.iterations()
                            * static_cast<std::int64_t>(s.size()));
  }

  void BM_LengthSetsParallel(benchmark::State& state) {
    auto p = m1();
    auto s = seeds(p, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(
          factorlab::kernels::length_sets_parallel(s, p, BudgetPolicy{}));
    }
    state.SetItemsProcessed(state.iterations()
                            * static_cast<std::int64_t>(s.size()));
  }

  void BM_UnionSerial(benchmark::State& state) {
    auto         p = m3();
    auto         s = seeds(p, static_cast<std::size_t>(state.range(0)));
    BudgetPolicy policy;
    policy.max_word_len = 40;
    for (auto _ : state) {
      benchmark::DoNotOptimize(factorlab::kernels::union_serial(s, p, policy));
    }
  }

  void BM_UnionParallel(benchmark::State& state) {
    auto         p = m3();
    auto         s = seeds(p, static_cast<std::size_t>(state.range(0)));
    BudgetPolicy policy;
    policy.max_word_len = 40;
    for (auto _ : state) {
      benchmark::DoNotOptimize(
          factorlab::kernels::union_parallel(s, p, policy));
    }
  }

}  // namespace

BENCHMARK(BM_LengthSetsSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LengthSetsParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnionSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UnionParallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
