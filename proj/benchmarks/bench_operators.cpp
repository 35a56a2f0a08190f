#include <benchmark/benchmark.h>

#include "shuffle/dyck_algebra.hpp"
#include "shuffle/macdonald.hpp"

namespace {

using namespace shuffle;

void BM_chi_via_word(benchmark::State& state) {
  DyckPath p = DyckPath::from_word("NENNEENNEENE");
  for (auto _ : state) benchmark::DoNotOptimize(chi_via_word(p));
}
BENCHMARK(BM_chi_via_word);

void BM_nabla_en(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SymFunc en = SymFunc::generator(Basis::e, Partition(std::vector<int>{n}));
  for (auto _ : state) benchmark::DoNotOptimize(nabla(en));
}
BENCHMARK(BM_nabla_en)->Arg(3)->Arg(5);

}  // namespace
