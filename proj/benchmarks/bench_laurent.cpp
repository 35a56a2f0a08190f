#include <benchmark/benchmark.h>

#include "shuffle/laurent.hpp"

namespace {

using namespace shuffle;

LaurentMPoly dense_poly(int deg) {
  LaurentMPoly p;
  for (int a = -deg; a <= deg; ++a)
    for (int b = 0; b <= deg; ++b)
      p += LaurentMPoly::monomial(Rational(a + b + 1), {{"q", a}, {"t", b}});
  return p;
}

void BM_laurent_mul(benchmark::State& state) {
  LaurentMPoly a = dense_poly(static_cast<int>(state.range(0)));
  LaurentMPoly b = dense_poly(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_laurent_mul)->Arg(3)->Arg(6);

void BM_exact_div(benchmark::State& state) {
  LaurentMPoly a = dense_poly(static_cast<int>(state.range(0)));
  LaurentMPoly b = dense_poly(2);
  LaurentMPoly prod = a * b;
  for (auto _ : state) benchmark::DoNotOptimize(exact_div(prod, b));
}
BENCHMARK(BM_exact_div)->Arg(3)->Arg(5);

}  // namespace
