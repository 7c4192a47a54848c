// Copyright 2026 The cvtl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "cvtl/covariance.hpp"
#include "cvtl/metrics.hpp"
#include "cvtl/optimize.hpp"
#include "cvtl/protocol.hpp"
#include "cvtl/random.hpp"
#include "cvtl/symplectic.hpp"

namespace {

using namespace cvtl;

void BM_RunProtocolQnd(benchmark::State& state) {
  ProtocolConfig c;
  c.g = 1.0;
  c.bell = BellQnd{4.0 / 3.0};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_metrics(c));
}
BENCHMARK(BM_RunProtocolQnd);

void BM_RunProtocolGeneric(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto bell = random_bell_interaction(rng);
  const auto shared = shared_state_qnd(1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_protocol(shared, BellGeneric{bell}, SymplecticMat2(), SymplecticMat2(), UnityGain{}));
  }
}
BENCHMARK(BM_RunProtocolGeneric);

void BM_BlochMessiah(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto s = random_symplectic2(rng, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(bloch_messiah_2x2(s));
}
BENCHMARK(BM_BlochMessiah);

void BM_StandardForm(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto v = shared_state_qnd(1.0).transformed(
      direct_sum(random_symplectic2(rng), random_symplectic2(rng)));
  for (auto _ : state) benchmark::DoNotOptimize(two_mode_standard_form(v));
}
BENCHMARK(BM_StandardForm);

void BM_OptimalLocalOps(benchmark::State& state) {
  const auto v = shared_state_qnd(1.0);
  const auto bell = make_bell_qnd(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_local_ops(v, bell));
}
BENCHMARK(BM_OptimalLocalOps);

void BM_GainOracle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_gain_search(2.5, 1.0, GainObjective::kMaxT));
  }
}
BENCHMARK(BM_GainOracle)->Unit(benchmark::kMillisecond);

void BM_LocalOpsOracle(benchmark::State& state) {
  const auto [a, c] = tms_parameters(0.5);
  LocalOpsSearchOptions o;
  o.starts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_local_ops_search(a, c, o));
}
BENCHMARK(BM_LocalOpsOracle)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_GprimeFidelity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(optimal_gprime_fidelity(1.0));
}
BENCHMARK(BM_GprimeFidelity)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
