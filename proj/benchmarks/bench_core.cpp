// Copyright 2026 The flexcoal Authors.
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

#include "flexcoal/assets.hpp"
#include "flexcoal/prices.hpp"
#include "flexcoal/settlement.hpp"
#include "flexcoal/shapley.hpp"
#include "flexcoal/synergy.hpp"

using namespace flexcoal;

namespace {

void BM_settle_horizon(benchmark::State& state) {
    const int n_assets = static_cast<int>(state.range(0));
    const PriceSeries prices = generate_synthetic_prices(1, 233, 0.4);
    const auto pop = AssetPopulation::build(n_assets, 5);
    for (auto _ : state) {
        auto r = settle_horizon(pop, DemandSet::all(5), prices, PenaltyPrice(0.1), 42);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_settle_horizon)->Arg(100)->Arg(1000);

void BM_settle_individual(benchmark::State& state) {
    const PriceSeries prices = generate_synthetic_prices(1, 233, 0.4);
    const auto pop = AssetPopulation::build(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        auto r = settle_individual(pop, prices, PenaltyPrice(0.1), 42);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_settle_individual)->Arg(1000);

void BM_characteristic_table(benchmark::State& state) {
    const PriceSeries prices = generate_synthetic_prices(1, 233, 0.4);
    const auto pop = AssetPopulation::build(1000, 5, {}, DemandSet::single(1));
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto t = characteristic_table(pop, prices, PenaltyPrice(0.1), 42, jobs);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_characteristic_table)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_exact_shapley(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    CharacteristicTable table;
    table.n_demands = n;
    table.values.resize(1ULL << n);
    for (std::uint64_t m = 1; m < table.values.size(); ++m)
        table.values[m] = static_cast<double>(m % 97);
    for (auto _ : state) {
        auto a = exact_shapley(table);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_exact_shapley)->Arg(5)->Arg(12)->Arg(16);

} // namespace

BENCHMARK_MAIN();
