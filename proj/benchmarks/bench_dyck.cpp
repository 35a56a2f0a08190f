#include <benchmark/benchmark.h>

#include "shuffle/charfunc.hpp"
#include "shuffle/dyck.hpp"

namespace {

using namespace shuffle;

void BM_zeta_all(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto paths = enumerate_paths(n);
  for (auto _ : state) {
    for (const auto& p : paths) benchmark::DoNotOptimize(zeta(p));
  }
}
BENCHMARK(BM_zeta_all)->Arg(6)->Arg(8);

void BM_chi(benchmark::State& state) {
  DyckPath p = DyckPath::from_word("NENNNENNEEEENNEE");
  for (auto _ : state) benchmark::DoNotOptimize(chi(p));
}
BENCHMARK(BM_chi);

}  // namespace
