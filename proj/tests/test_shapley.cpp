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

#include "flexcoal/rng.hpp"
#include "flexcoal/shapley.hpp"
#include "oracles.hpp"

using namespace flexcoal;

namespace {

CharacteristicTable make_table(int n, std::vector<double> values) {
    CharacteristicTable t;
    t.n_demands = n;
    t.values = std::move(values);
    return t;
}

CharacteristicTable random_table(int n, std::uint64_t seed) {
    CharacteristicTable t;
    t.n_demands = n;
    t.values.resize(1ULL << n, 0.0);
    for (std::uint64_t m = 1; m < t.values.size(); ++m)
        t.values[m] = 20.0 * rng::uniform01(seed, m) - 5.0;
    return t;
}

CharacteristicTable additive_table(const std::vector<double>& c) {
    const int n = static_cast<int>(c.size());
    CharacteristicTable t;
    t.n_demands = n;
    t.values.resize(1ULL << n, 0.0);
    for (std::uint64_t m = 1; m < t.values.size(); ++m)
        for (int d = 0; d < n; ++d)
            if (m >> d & 1) t.values[m] += c[d];
    return t;
}

double payments_sum(const Allocation& a) {
    double s = 0.0;
    for (const auto& [d, phi] : a.payments) s += phi;
    return s;
}

} // namespace

TEST_CASE("one-demand table: the demand gets the whole value") {
    const PriceSeries prices = generate_synthetic_prices(4, 5, 0.5);
    const auto pop = AssetPopulation::build(7, 1);
    const CharacteristicTable t = characteristic_table(pop, prices, PenaltyPrice(0.1), 3);
    REQUIRE(t.values.size() == 2);
    CHECK(t.values[0] == 0.0);
    const double solo =
        settle_horizon(pop, DemandSet::all(1), prices, PenaltyPrice(0.1), 3).totals.total();
    CHECK(t.values[1] == solo);

    const Allocation a = exact_shapley(t);
    CHECK(a.payments.at(1) == solo);
    CHECK(a.subsets_evaluated == 1);
}

TEST_CASE("five demands: 32 entries, 31 non-empty") {
    const PriceSeries prices = generate_synthetic_prices(4, 4, 0.5);
    const auto pop = AssetPopulation::build(20, 5);
    const CharacteristicTable t = characteristic_table(pop, prices, PenaltyPrice(0.1), 3);
    CHECK(t.values.size() == 32);
    CHECK(t.values[0] == 0.0);
    for (std::uint64_t m = 1; m < 32; ++m) CHECK(t.values[m] != 0.0);
    CHECK(exact_shapley(t).subsets_evaluated == 31);
}

TEST_CASE("zero activation makes the game additive: v(S) = sum of singletons") {
    const PriceSeries prices = generate_synthetic_prices(8, 5, 0.0);
    const auto pop = AssetPopulation::build(12, 3);
    const CharacteristicTable t = characteristic_table(pop, prices, PenaltyPrice(0.4), 5);
    for (std::uint64_t m = 1; m < t.values.size(); ++m) {
        double sum = 0.0;
        for (int d = 0; d < 3; ++d)
            if (m >> d & 1) sum += t.values[1ULL << d];
        CHECK(t.values[m] == doctest::Approx(sum).epsilon(1e-12));
    }
}

TEST_CASE("characteristic table caps at 20 demands") {
    const PriceSeries prices = generate_synthetic_prices(1, 3, 0.5);
    const auto pop = AssetPopulation::build(21, 21);
    CHECK_THROWS_AS(characteristic_table(pop, prices, PenaltyPrice(0.1), 1),
                    TooManyDemands);
}

TEST_CASE("parallel table evaluation matches serial") {
    const PriceSeries prices = generate_synthetic_prices(6, 5, 0.5);
    const auto pop = AssetPopulation::build(25, 4, {}, DemandSet::single(2));
    const CharacteristicTable a = characteristic_table(pop, prices, PenaltyPrice(0.1), 7, 1);
    const CharacteristicTable b = characteristic_table(pop, prices, PenaltyPrice(0.1), 7, 4);
    CHECK(a.values == b.values);
}

TEST_CASE("additive game: every demand is paid its own constant") {
    const std::vector<double> c{2.0, -1.0, 5.5, 0.25};
    const Allocation a = exact_shapley(additive_table(c));
    for (int d = 1; d <= 4; ++d)
        CHECK(a.payments.at(d) == doctest::Approx(c[d - 1]).epsilon(1e-12));
}

TEST_CASE("two-player hand example: v(1)=1, v(2)=1, v(12)=3 -> (1.5, 1.5)") {
    const Allocation a = exact_shapley(make_table(2, {0.0, 1.0, 1.0, 3.0}));
    CHECK(a.payments.at(1) == 1.5);
    CHECK(a.payments.at(2) == 1.5);
    CHECK(a.grand_value == 3.0);
}

TEST_CASE("exact shapley equals the permutation enumerator") {
    for (int n = 2; n <= 6; ++n) {
        const CharacteristicTable t = random_table(n, 100 + n);
        const Allocation a = exact_shapley(t);
        const auto want = oracles::permutation_shapley(t.values, n);
        for (int d = 1; d <= n; ++d)
            CHECK(a.payments.at(d) == doctest::Approx(want[d - 1]).epsilon(1e-12));
    }
}

TEST_CASE("efficiency: payments sum to the grand value") {
    for (int n = 2; n <= 6; ++n) {
        const CharacteristicTable t = random_table(n, 200 + n);
        const Allocation a = exact_shapley(t);
        CHECK(std::abs(payments_sum(a) - t.grand_value()) <= 1e-9 * n);
    }
}

TEST_CASE("symmetry: interchangeable demands receive equal payments") {
    // make demands 1 and 2 interchangeable: v depends on |S ∩ {1,2}| only
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const int n = 4;
        CharacteristicTable t;
        t.n_demands = n;
        t.values.resize(1ULL << n, 0.0);
        for (std::uint64_t m = 1; m < t.values.size(); ++m) {
            const std::uint64_t rest = m >> 2;
            const int k = static_cast<int>((m & 1) + (m >> 1 & 1));
            t.values[m] = 10.0 * rng::uniform01(seed, rest, k);
        }
        const Allocation a = exact_shapley(t);
        CHECK(a.payments.at(1) == doctest::Approx(a.payments.at(2)).epsilon(1e-12));
    }
}

TEST_CASE("dummy: zero marginal contribution means zero payment") {
    // demand 3 never changes the value
    CharacteristicTable t = random_table(2, 55);
    CharacteristicTable with_dummy;
    with_dummy.n_demands = 3;
    with_dummy.values.resize(8, 0.0);
    for (std::uint64_t m = 0; m < 8; ++m) with_dummy.values[m] = t.values[m & 3];
    const Allocation a = exact_shapley(with_dummy);
    CHECK(a.payments.at(3) == 0.0);
}

TEST_CASE("linearity: shapley(a + b) = shapley(a) + shapley(b)") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const int n = 5;
        const CharacteristicTable ta = random_table(n, 300 + seed);
        const CharacteristicTable tb = random_table(n, 400 + seed);
        CharacteristicTable tsum;
        tsum.n_demands = n;
        tsum.values.resize(1ULL << n);
        for (std::uint64_t m = 0; m < tsum.values.size(); ++m)
            tsum.values[m] = ta.values[m] + tb.values[m];
        const Allocation a = exact_shapley(ta);
        const Allocation b = exact_shapley(tb);
        const Allocation s = exact_shapley(tsum);
        for (int d = 1; d <= n; ++d)
            CHECK(s.payments.at(d) ==
                  doctest::Approx(a.payments.at(d) + b.payments.at(d)).epsilon(1e-9));
    }
}

TEST_CASE("incomplete tables are rejected") {
    CHECK_THROWS_AS(exact_shapley(make_table(2, {0.0, 1.0, 1.0})), IncompleteTable);
    CHECK_THROWS_AS(exact_shapley(make_table(2, {0.5, 1.0, 1.0, 3.0})), IncompleteTable);
}

TEST_CASE("exhaustive permutation sampling equals exact shapley") {
    const CharacteristicTable t = random_table(4, 77);
    const Allocation exact = exact_shapley(t);
    const Allocation sampled = sampled_shapley(
        [&](std::uint64_t m) { return t.values[m]; }, 4, 0, 0, /*exhaustive=*/true);
    CHECK(sampled.samples == 24); // 4!
    for (int d = 1; d <= 4; ++d)
        CHECK(sampled.payments.at(d) ==
              doctest::Approx(exact.payments.at(d)).epsilon(1e-12));
}

TEST_CASE("additive game has zero sampling variance") {
    const CharacteristicTable t = additive_table({1.0, 2.0, 3.0});
    const Allocation a = sampled_shapley(
        [&](std::uint64_t m) { return t.values[m]; }, 3, 25, 5);
    for (int d = 1; d <= 3; ++d) {
        CHECK(a.payments.at(d) == doctest::Approx(static_cast<double>(d)).epsilon(1e-12));
        CHECK(a.std_errors.at(d) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("sampled estimates land within 3 standard errors of exact") {
    const CharacteristicTable t = random_table(5, 88);
    const Allocation exact = exact_shapley(t);
    const Allocation sampled = sampled_shapley(
        [&](std::uint64_t m) { return t.values[m]; }, 5, 10000, 123);
    for (int d = 1; d <= 5; ++d) {
        const double se = sampled.std_errors.at(d);
        CHECK(std::abs(sampled.payments.at(d) - exact.payments.at(d)) <= 3.0 * se);
    }
}

TEST_CASE("leave-one-out on two demands: the survivor keeps its solo value") {
    const CharacteristicTable t = make_table(2, {0.0, 1.25, 0.75, 3.0});
    const Allocation a = leave_one_out(t, 2);
    REQUIRE(a.payments.size() == 1);
    CHECK(a.payments.at(1) == 1.25);
    CHECK(a.grand_value == 1.25);
}

TEST_CASE("leave-one-out is efficient on the sub-game") {
    const CharacteristicTable t = random_table(5, 91);
    const Allocation a = leave_one_out(t, 1);
    // payments cover demands 2..5 and sum to v(D \ {1})
    CHECK(a.payments.size() == 4);
    CHECK(a.payments.count(1) == 0);
    CHECK(payments_sum(a) == doctest::Approx(t.values[0b11110]).epsilon(1e-9));

    // cross-check against the enumerator on the restricted game
    std::vector<double> sub(16);
    for (std::uint64_t m = 0; m < 16; ++m) sub[m] = t.values[m << 1];
    const auto want = oracles::permutation_shapley(sub, 4);
    for (int d = 2; d <= 5; ++d)
        CHECK(a.payments.at(d) == doctest::Approx(want[d - 2]).epsilon(1e-12));
}

TEST_CASE("leave-one-out rejects unknown demands") {
    const CharacteristicTable t = random_table(3, 5);
    CHECK_THROWS_AS(leave_one_out(t, 4), UnknownDemand);
    CHECK_THROWS_AS(leave_one_out(t, 0), UnknownDemand);
}
