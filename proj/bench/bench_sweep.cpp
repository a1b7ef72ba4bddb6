// Serial reference vs OpenMP sweep over the duality corpus.

#include "negn/corpus.hpp"
#include "negn/sweep.hpp"

#include <benchmark/benchmark.h>

namespace {

std::vector<negn::StableRep> corpus(int count) {
  return negn::random_corpus(42, 6, count);
}

void BM_Checks(benchmark::State& state, negn::Backend backend) {
  const auto reps = corpus(static_cast<int>(state.range(0)));
  const negn::Identity ids[] = {negn::Identity::prop1, negn::Identity::prop2,
                                negn::Identity::z2};
  for (auto _ : state)
    benchmark::DoNotOptimize(negn::run_checks(reps, ids, backend));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 3);
}

void BM_Table(benchmark::State& state, negn::Backend backend) {
  const auto reps = negn::exhaustive_pairs(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(negn::build_table(reps, backend));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(reps.size()));
}

void BM_Casimir(benchmark::State& state, negn::Backend backend) {
  const auto reps = corpus(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(negn::cross_validate_casimir(reps, 10, backend));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Checks, serial, negn::Backend::serial)->Arg(50)->Arg(200);
BENCHMARK_CAPTURE(BM_Checks, parallel, negn::Backend::parallel)->Arg(50)->Arg(200);
BENCHMARK_CAPTURE(BM_Table, serial, negn::Backend::serial)->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(BM_Table, parallel, negn::Backend::parallel)->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(BM_Casimir, serial, negn::Backend::serial)->Arg(200);
BENCHMARK_CAPTURE(BM_Casimir, parallel, negn::Backend::parallel)->Arg(200);

BENCHMARK_MAIN();
