#include <benchmark/benchmark.h>

#include <random>

#include "minroots/brink.hpp"
#include "minroots/oracle.hpp"
#include "minroots/wordeng.hpp"

namespace {

using namespace minroots;

const CoxeterSystem& triangle() {
  static const CoxeterSystem sys = parse_system("3\n1 3 4\n3 1 3\n4 3 1\n");
  return sys;
}

Word random_word(std::mt19937_64& rng, unsigned rank, std::size_t len) {
  std::uniform_int_distribution<Generator> g(0, rank - 1);
  Word w(len);
  for (auto& x : w) x = g(rng);
  return w;
}

void BM_Normalize(benchmark::State& state) {
  const auto table = build_table_brink(triangle());
  std::mt19937_64 rng(5);
  const Word w = random_word(rng, 3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(table, w));
  state.SetComplexityN(state.range(0));
}

void BM_LeftMultiply(benchmark::State& state) {
  const auto table = build_table_brink(triangle());
  std::mt19937_64 rng(5);
  const Word nf = normalize(table, random_word(rng, 3, static_cast<std::size_t>(state.range(0))));
  Generator s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(left_multiply(table, s, nf));
    s = (s + 1) % 3;
  }
  state.counters["nf_len"] = static_cast<double>(nf.size());
  state.SetComplexityN(static_cast<std::int64_t>(nf.size()));
}

void BM_OracleBall(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(CayleyBall(triangle(), static_cast<unsigned>(state.range(0))).size());
}

}  // namespace

BENCHMARK(BM_Normalize)->RangeMultiplier(4)->Range(16, 1024)->Complexity();
BENCHMARK(BM_LeftMultiply)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);
BENCHMARK(BM_OracleBall)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
