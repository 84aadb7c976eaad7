// Copyright 2026 The abeljacobi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "abeljacobi/modforms/squares.hpp"
#include "abeljacobi/modforms/tau.hpp"
#include "abeljacobi/torsion/torsion.hpp"

using namespace abeljacobi;

namespace {

modforms::IntegerSeries operand(std::size_t order) { return modforms::theta_power(4, order); }

void BM_SeriesMultiplySerial(benchmark::State& state) {
  const auto a = operand(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(modforms::multiply_serial(a, a));
}

void BM_SeriesMultiplyParallel(benchmark::State& state) {
  const auto a = operand(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(modforms::multiply(a, a));
}

const curve::WeierstrassCurve& x11() {
  static const curve::WeierstrassCurve E = curve::WeierstrassCurve::parse("0,-1,-1,0,0");
  return E;
}

void BM_TorsionXValuesSerial(benchmark::State& state) {
  const numerics::PrecisionContext ctx(static_cast<int>(state.range(1)));
  const auto L = analytic::periods(x11(), ctx);
  const auto orbits = torsion::enumerate_torsion_reps(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(torsion::torsion_x_values_serial(x11(), L, orbits));
}

void BM_TorsionXValuesParallel(benchmark::State& state) {
  const numerics::PrecisionContext ctx(static_cast<int>(state.range(1)));
  const auto L = analytic::periods(x11(), ctx);
  const auto orbits = torsion::enumerate_torsion_reps(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(torsion::torsion_x_values(x11(), L, orbits));
}

}  // namespace

BENCHMARK(BM_SeriesMultiplySerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeriesMultiplyParallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TorsionXValuesSerial)->Args({7, 256})->Args({11, 512})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorsionXValuesParallel)->Args({7, 256})->Args({11, 512})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
