#include <benchmark/benchmark.h>

#include <random>

#include "minroots/brink.hpp"
#include "minroots/naive.hpp"

namespace {

using namespace minroots;

CoxeterSystem random_system(unsigned rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Order orders[] = {2, 3, 4, 5};
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Order> m(std::size_t{rank} * rank, 1);
  for (unsigned i = 0; i < rank; ++i)
    for (unsigned j = i + 1; j < rank; ++j) m[i * rank + j] = m[j * rank + i] = orders[pick(rng)];
  return CoxeterSystem(rank, std::move(m));
}

CoxeterSystem linear(unsigned rank, Order end) {
  std::vector<Order> m(std::size_t{rank} * rank, 2);
  for (unsigned i = 0; i < rank; ++i) m[i * rank + i] = 1;
  for (unsigned i = 0; i + 1 < rank; ++i) m[i * rank + i + 1] = m[(i + 1) * rank + i] = 3;
  m[(rank - 2) * rank + rank - 1] = m[(rank - 1) * rank + rank - 2] = end;
  return CoxeterSystem(rank, std::move(m));
}

void BM_Naive(benchmark::State& state) {
  const auto sys = random_system(static_cast<unsigned>(state.range(0)), 1234);
  std::size_t n = 0;
  for (auto _ : state) n = build_table_naive(sys).size();
  state.counters["roots"] = static_cast<double>(n);
}

void BM_Brink(benchmark::State& state) {
  const auto sys = random_system(static_cast<unsigned>(state.range(0)), 1234);
  std::size_t n = 0;
  for (auto _ : state) n = build_table_brink(sys).size();
  state.counters["roots"] = static_cast<double>(n);
}

void BM_BrinkNoCoords(benchmark::State& state) {
  const auto sys = random_system(static_cast<unsigned>(state.range(0)), 1234);
  for (auto _ : state) benchmark::DoNotOptimize(BrinkBuilder(sys).run(false).size());
}

void BM_NaiveLinear(benchmark::State& state) {
  const auto sys = linear(static_cast<unsigned>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(build_table_naive(sys).size());
}

void BM_BrinkLinear(benchmark::State& state) {
  const auto sys = linear(static_cast<unsigned>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(build_table_brink(sys).size());
}

}  // namespace

BENCHMARK(BM_Naive)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Brink)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BrinkNoCoords)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NaiveLinear)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BrinkLinear)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
