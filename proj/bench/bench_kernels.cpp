#include "neu/batch.hpp"
#include "neu/random.hpp"
#include "neu/sweep.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

std::vector<neu::Triple> random_triples(std::size_t n, std::uint64_t seed)
{
  neu::SeededRng rng(seed);
  std::vector<neu::Triple> out(n);
  for (auto& v : out) v = rng.triple();
  return out;
}

template <neu::Execution Exec>
void BM_BatchEquivalence(benchmark::State& state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto lhs = random_triples(n, 1);
  const auto rhs = random_triples(n, 2);
  std::vector<neu::Triple> out(n);
  for (auto _ : state) {
    neu::batch::apply(neu::ConnectorKind::Equivalence, lhs, rhs, out, Exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <neu::Execution Exec>
void BM_Sweep(benchmark::State& state)
{
  neu::SweepOptions o;
  o.step = 0.02;
  o.closure_cases = 20000;
  o.set_cases = 200;
  o.exec = Exec;
  for (auto _ : state) {
    auto report = neu::run_sweep(o);
    benchmark::DoNotOptimize(report.properties.data());
  }
}

}  // namespace

BENCHMARK(BM_BatchEquivalence<neu::Execution::Serial>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_BatchEquivalence<neu::Execution::Parallel>)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_Sweep<neu::Execution::Serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<neu::Execution::Parallel>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
