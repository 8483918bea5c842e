#include <benchmark/benchmark.h>

#include "broomrank/broom.hpp"
#include "broomrank/enumeration.hpp"
#include "broomrank/oracle.hpp"

namespace {

using broomrank::BroomPair;

BroomPair pair_of_size(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  return BroomPair(m, m, m / 2 + 1, m);
}

void BM_RankClosed(benchmark::State& state) {
  const auto pair = pair_of_size(state);
  for (auto _ : state) benchmark::DoNotOptimize(broomrank::rank_closed(pair));
}
BENCHMARK(BM_RankClosed)->RangeMultiplier(2)->Range(4, 64);

void BM_RankConvolution(benchmark::State& state) {
  const auto pair = pair_of_size(state);
  for (auto _ : state) benchmark::DoNotOptimize(broomrank::rank_convolution(pair));
}
BENCHMARK(BM_RankConvolution)->RangeMultiplier(2)->Range(4, 64);

void BM_SubtreePolynomial(benchmark::State& state) {
  const auto tree = broomrank::oracle::merged_brooms(pair_of_size(state));
  for (auto _ : state) benchmark::DoNotOptimize(broomrank::oracle::subtree_polynomial(tree));
}
BENCHMARK(BM_SubtreePolynomial)->RangeMultiplier(2)->Range(4, 64);

void BM_ClassifyTheorem(benchmark::State& state) {
  const auto pair = pair_of_size(state);
  for (auto _ : state) benchmark::DoNotOptimize(broomrank::classify_theorem(pair));
}
BENCHMARK(BM_ClassifyTheorem)->Arg(8)->Arg(64);

void BM_ClassifyDirect(benchmark::State& state) {
  const auto pair = pair_of_size(state);
  for (auto _ : state) benchmark::DoNotOptimize(broomrank::classify_direct(pair));
}
BENCHMARK(BM_ClassifyDirect)->Arg(8)->Arg(64);

void BM_BBruteForce(benchmark::State& state) {
  const int i = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(broomrank::enumeration::b_bruteforce(i));
}
BENCHMARK(BM_BBruteForce)->Arg(16)->Arg(24)->Arg(40);

void BM_TBruteForce(benchmark::State& state) {
  const int i = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(broomrank::enumeration::t_bruteforce(i));
}
BENCHMARK(BM_TBruteForce)->Arg(16)->Arg(24)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
