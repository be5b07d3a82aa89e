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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "flexcoal/assets.hpp"
#include "flexcoal/rng.hpp"

using namespace flexcoal;

TEST_CASE("uniform split of 1000 assets over 5 demands gives 200 each") {
    const auto pop = AssetPopulation::build(1000, 5);
    std::array<int, 6> counts{};
    for (AssetId a = 0; a < pop.n_assets(); ++a) ++counts[pop.owner(a)];
    for (int d = 1; d <= 5; ++d) CHECK(counts[d] == 200);
}

TEST_CASE("uniform split remainders go to the lowest demand ids") {
    const auto pop = AssetPopulation::build(11, 3);
    std::array<int, 4> counts{};
    for (AssetId a = 0; a < pop.n_assets(); ++a) ++counts[pop.owner(a)];
    CHECK(counts[1] == 4);
    CHECK(counts[2] == 4);
    CHECK(counts[3] == 3);
}

TEST_CASE("a single demand owns everything") {
    const auto pop = AssetPopulation::build(3, 1);
    for (AssetId a = 0; a < 3; ++a) CHECK(pop.owner(a) == 1);
}

TEST_CASE("explicit split with an always-fail demand") {
    const auto pop =
        AssetPopulation::build(10, 3, std::vector<int>{4, 3, 3}, DemandSet::single(1));
    int d1 = 0;
    for (AssetId a = 0; a < pop.n_assets(); ++a)
        if (pop.owner(a) == 1) ++d1;
    CHECK(d1 == 4);
    CHECK(pop.always_fail().contains(1));
    CHECK(pop.fails(0));
    CHECK_FALSE(pop.fails(4));
}

TEST_CASE("split that does not sum to the asset count is rejected") {
    CHECK_THROWS_AS(AssetPopulation::build(10, 2, std::vector<int>{4, 4}),
                    SplitMismatch);
}

TEST_CASE("always-fail demand outside the population is rejected") {
    CHECK_THROWS_AS(AssetPopulation::build(10, 2, {}, DemandSet::single(3)),
                    UnknownDemand);
}

TEST_CASE("one asset consumes in exactly one hour") {
    const auto pop = AssetPopulation::build(1, 1);
    const ConsumptionDay cd = realize_day(pop, 1, 5);
    REQUIRE(cd.hour_of.size() == 1);
    CHECK(cd.hour_of[0] >= 1);
    CHECK(cd.hour_of[0] <= 24);
    const auto kw = aggregate_consumption(pop, cd, DemandSet::all(1));
    double total = std::accumulate(kw.begin(), kw.end(), 0.0);
    CHECK(total == 1.0);
    CHECK(kw[cd.hour_of[0] - 1] == 1.0);
}

TEST_CASE("realize_day is deterministic in (population, day, seed)") {
    const auto pop = AssetPopulation::build(100, 4);
    const ConsumptionDay a = realize_day(pop, 17, 99);
    const ConsumptionDay b = realize_day(pop, 17, 99);
    CHECK(a.hour_of == b.hour_of);
    const ConsumptionDay c = realize_day(pop, 18, 99);
    CHECK(a.hour_of != c.hour_of); // independent redraw the next day
}

TEST_CASE("hour draws concentrate binomially: each hour within 5 sigma") {
    const int n = 24000;
    const auto pop = AssetPopulation::build(n, 1);
    const ConsumptionDay cd = realize_day(pop, 1, 123);
    std::array<int, 24> counts{};
    for (auto h : cd.hour_of) ++counts[h - 1];
    const double p = 1.0 / 24.0;
    const double sigma = std::sqrt(n * p * (1.0 - p));
    for (int h = 0; h < 24; ++h)
        CHECK(std::abs(counts[h] - n * p) <= 5.0 * sigma);
}

TEST_CASE("aggregate conservation: hourly sum equals the subset asset count") {
    const auto pop = AssetPopulation::build(137, 5);
    for (int day = 1; day <= 4; ++day) {
        const ConsumptionDay cd = realize_day(pop, day, 7);
        const auto kw = aggregate_consumption(pop, cd, DemandSet::all(5));
        CHECK(std::accumulate(kw.begin(), kw.end(), 0.0) == 137.0);
    }
}

TEST_CASE("aggregate of the empty subset is the zero vector") {
    const auto pop = AssetPopulation::build(50, 5);
    const ConsumptionDay cd = realize_day(pop, 1, 7);
    const auto kw = aggregate_consumption(pop, cd, DemandSet{});
    for (double v : kw) CHECK(v == 0.0);
}

TEST_CASE("aggregation is additive over disjoint demand subsets") {
    // random populations and days, element-wise check
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        const int n_assets = 5 + static_cast<int>(rng::hash(trial, 1) % 200);
        const int n_demands = 2 + static_cast<int>(rng::hash(trial, 2) % 6);
        const auto pop = AssetPopulation::build(n_assets, n_demands);
        const ConsumptionDay cd = realize_day(pop, 1 + trial % 5, trial);

        DemandSet a, b;
        for (DemandId d = 1; d <= n_demands; ++d)
            (rng::hash(trial, 3, d) % 2 ? a : b).add(d);
        DemandSet both(a.bits() | b.bits());

        const auto kw_a = aggregate_consumption(pop, cd, a);
        const auto kw_b = aggregate_consumption(pop, cd, b);
        const auto kw_ab = aggregate_consumption(pop, cd, both);
        for (int h = 0; h < 24; ++h) CHECK(kw_ab[h] == kw_a[h] + kw_b[h]);
    }
}

TEST_CASE("aggregating an unknown demand throws") {
    const auto pop = AssetPopulation::build(10, 2);
    CHECK_THROWS_AS(aggregate_consumption(pop, realize_day(pop, 1, 1),
                                          DemandSet::single(3)),
                    UnknownDemand);
}

TEST_CASE("failing aggregate only counts always-fail members of the subset") {
    const auto pop =
        AssetPopulation::build(10, 2, std::vector<int>{5, 5}, DemandSet::single(1));
    const ConsumptionDay cd = realize_day(pop, 1, 3);
    const auto fail_all = aggregate_failing(pop, cd, DemandSet::all(2));
    const auto fail_d2 = aggregate_failing(pop, cd, DemandSet::single(2));
    CHECK(std::accumulate(fail_all.begin(), fail_all.end(), 0.0) == 5.0);
    CHECK(std::accumulate(fail_d2.begin(), fail_d2.end(), 0.0) == 0.0);
}
