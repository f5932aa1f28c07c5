#include <random>

#include <benchmark/benchmark.h>

#include "grbraid/braid_sigma.hpp"
#include "grbraid/cluster_seed.hpp"
#include "grbraid/ext_crystal.hpp"
#include "grbraid/translation.hpp"

using namespace grbraid;

namespace {

void BM_SigmaWordExpansion(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  const PlueckerPoly p = PlueckerPoly::variable(4, {1, 3, 5, 6});
  std::vector<int> word;
  for (int s = 0; s < len; ++s) word.push_back(1 + s % 3);
  for (auto _ : state) benchmark::DoNotOptimize(apply_word(p, word));
}
BENCHMARK(BM_SigmaWordExpansion)->DenseRange(1, 4);

void BM_EqMod(benchmark::State& state) {
  const PlueckerPoly one = PlueckerPoly::constant(3, 1);
  const PlueckerPoly lhs = PlueckerPoly::variable(3, {1, 4, 5}) * PlueckerPoly::variable(3, {2, 3, 6}) - one;
  const PlueckerPoly rhs = example63_expansion();
  for (auto _ : state) benchmark::DoNotOptimize(eq_mod(lhs, rhs).equal);
}
BENCHMARK(BM_EqMod);

void BM_BraidR(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<ExtElement> inputs;
  for (int s = 0; s < 256; ++s) inputs.push_back(random_ext_element(4, rng));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(braid_R(inputs[k++ % inputs.size()], 2));
}
BENCHMARK(BM_BraidR);

void BM_Mutate(benchmark::State& state) {
  const Seed s = initial_seed(4, 8);
  for (auto _ : state) benchmark::DoNotOptimize(mutate(s, {1, 1}));
}
BENCHMARK(BM_Mutate)->Unit(benchmark::kMillisecond);

void BM_CommuteCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(commute_check(n, 1, -2 * n, 4 * n).passed());
}
BENCHMARK(BM_CommuteCheck)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
