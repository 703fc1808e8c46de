/*
Copyright 2026 The kzsim Authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "kzsim/embedding.hpp"
#include "kzsim/model.hpp"
#include "kzsim/rng.hpp"
#include "kzsim/svmc.hpp"
#include "kzsim/theory.hpp"
#include "kzsim/units.hpp"

using namespace kzsim;

static void BM_RotorSweep(benchmark::State& state) {
    const auto chain = ChainInstance::uniform(static_cast<int>(state.range(0)), 1);
    svmc::RotorChain rotor(chain);
    Rng rng(1);
    const auto half = linear_schedule().half_at(0.5);
    const double beta = units::beta_per_ghz(12.1e-3);
    for (auto _ : state) benchmark::DoNotOptimize(rotor.sweep(half, beta, rng));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RotorSweep)->Arg(200)->Arg(800);

static void BM_PairDistribution(benchmark::State& state) {
    const auto p = theory::mode_probabilities({static_cast<int>(state.range(0)), 1.0});
    for (auto _ : state) benchmark::DoNotOptimize(theory::pair_distribution(p));
}
BENCHMARK(BM_PairDistribution)->Arg(200)->Arg(2000);

static void BM_SawChain(benchmark::State& state) {
    const embedding::ChimeraGraph graph(16);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(embedding::saw_chain(graph, static_cast<int>(state.range(0)), ++seed, 100000));
}
BENCHMARK(BM_SawChain)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

static void BM_CountKinks(benchmark::State& state) {
    const int length = static_cast<int>(state.range(0));
    const auto chain = ChainInstance::uniform(length, 1);
    Rng rng(2);
    std::vector<int> spins(length);
    for (auto& s : spins) s = rng.below(2) ? 1 : -1;
    const auto config = SpinConfig::from_values(spins);
    for (auto _ : state) benchmark::DoNotOptimize(count_kinks(chain, config));
    state.SetItemsProcessed(state.iterations() * length);
}
BENCHMARK(BM_CountKinks)->Arg(800)->Arg(4096);

BENCHMARK_MAIN();
