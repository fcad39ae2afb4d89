// Copyright 2026 The qsn Authors
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

#include "qsn/discrimination.hpp"
#include "qsn/montecarlo.hpp"
#include "qsn/protocols.hpp"

namespace {

using namespace qsn;

PhaseConfig phases_for(std::size_t n) {
    CounterRng rng(derive_key({n}));
    return sample_uniform_full(n, rng);
}

void BM_LocalCompact(benchmark::State& state) {
    const PhaseConfig phases = phases_for(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(project_local(run_local_protocol<ExcitationState>(phases)));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LocalCompact)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_LocalDense(benchmark::State& state) {
    const PhaseConfig phases = phases_for(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(project_local(run_local_protocol<QubitRegisterState>(phases)));
    }
}
BENCHMARK(BM_LocalDense)->DenseRange(4, 16, 4);

void BM_NonlocalCompact(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PhaseConfig phases = phases_for(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(project_nonlocal(run_nonlocal_protocol<ExcitationState>(phases, WMethod::cascade)));
    }
}
BENCHMARK(BM_NonlocalCompact)->RangeMultiplier(4)->Range(4, 1024);

void BM_ClosedFormTrial(benchmark::State& state) {
    SamplingPlan plan;
    plan.which = Case::similar_vs_different;
    plan.m = 10000;
    plan.n_values = {static_cast<std::size_t>(state.range(0))};
    std::uint64_t trial = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trial(plan, Strategy::nonlocal, plan.n_values[0], trial++));
    }
}
BENCHMARK(BM_ClosedFormTrial)->Arg(10)->Arg(1000);

void BM_RunPlan(benchmark::State& state) {
    SamplingPlan plan;
    plan.n_values = {2, 4, 6, 8, 10};
    plan.trials = 10000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_plan(plan, RunOptions{static_cast<unsigned>(state.range(0))}));
    }
}
BENCHMARK(BM_RunPlan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
