// Copyright 2026 The qdcavity Authors
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

#include <array>

#include "qdc/circuits.hpp"
#include "qdc/sweep.hpp"

namespace {

void BM_ClosedFormSweep(benchmark::State& state) {
  qdc::SweepSpec spec;
  const auto n = static_cast<std::size_t>(state.range(0));
  spec.g_over_kappa = {0.0, 5.0, n};
  spec.kappa_s_over_kappa = {0.0, 1.0, n};
  for (auto _ : state) benchmark::DoNotOptimize(qdc::run_sweep(spec, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n));
}
BENCHMARK(BM_ClosedFormSweep)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Cnot(benchmark::State& state) {
  qdc::CavityParams p;
  p.g = 2.4;
  p.kappa_s = 0.5;
  const auto mode = state.range(0) ? qdc::realistic(p) : qdc::GateMode{qdc::IdealScattering{}};
  for (auto _ : state) benchmark::DoNotOptimize(qdc::cnot(qdc::QubitState::plus(), qdc::QubitState::plus(), mode));
}
BENCHMARK(BM_Cnot)->Arg(0)->Arg(1);

void BM_Toffoli(benchmark::State& state) {
  qdc::CavityParams p;
  p.g = 2.4;
  p.kappa_s = 0.5;
  const auto mode = state.range(0) ? qdc::realistic(p) : qdc::GateMode{qdc::IdealScattering{}};
  const auto plus = qdc::QubitState::plus();
  for (auto _ : state) benchmark::DoNotOptimize(qdc::toffoli(plus, plus, plus, mode));
}
BENCHMARK(BM_Toffoli)->Arg(0)->Arg(1);

void BM_SimulatedSweep(benchmark::State& state) {
  qdc::SweepSpec spec;
  spec.g_over_kappa = {0.0, 5.0, 10};
  spec.kappa_s_over_kappa = {0.0, 1.0, 10};
  spec.outputs = {qdc::SweepOutput::SimFCnot, qdc::SweepOutput::SimFToffoli};
  for (auto _ : state) benchmark::DoNotOptimize(qdc::run_sweep(spec, 1));
}
BENCHMARK(BM_SimulatedSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
