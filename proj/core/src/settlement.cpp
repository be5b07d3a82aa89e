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

#include "flexcoal/settlement.hpp"

#include <algorithm>

#include "flexcoal/rng.hpp"

namespace flexcoal {

std::array<double, 24> persistence_baseline(const std::array<double, 24>& yesterday) {
    return yesterday;
}

std::array<double, 24> form_bid(const std::array<double, 24>& baseline) {
    return baseline;
}

DaySettlement settle_day(const std::array<double, 24>& bid,
                         const std::array<double, 24>& actual,
                         const std::array<double, 24>& failing,
                         const DayPrices& prices, const ActivationMask& mask,
                         PenaltyPrice penalty) {
    for (int h = 0; h < 24; ++h) {
        if (bid[h] < 0.0) throw NegativeQuantity("bid", h + 1);
        if (actual[h] < 0.0) throw NegativeQuantity("actual", h + 1);
        if (failing[h] < 0.0) throw NegativeQuantity("failing", h + 1);
        if (failing[h] > actual[h]) throw NegativeQuantity("actual - failing", h + 1);
    }

    DaySettlement s;
    s.position.day = mask.day;
    s.position.baseline = bid; // persistence + full-baseline bid: identical vectors
    s.position.bid = bid;
    s.position.actual = actual;
    for (int h = 0; h < 24; ++h) {
        s.profit.reservation += prices.mfrr[h] * bid[h];
        if (mask.active[h]) {
            const double curtailable = actual[h] - failing[h];
            const double delivered = std::min(bid[h], curtailable);
            const double shortfall = bid[h] - delivered;
            s.position.delivered[h] = delivered;
            s.position.shortfall[h] = shortfall;
            s.profit.activation += prices.balancing[h] * delivered;
            s.profit.penalty += penalty.value * shortfall;
        }
    }
    return s;
}

HorizonResult settle_horizon(const AssetPopulation& population, DemandSet subset,
                             const PriceSeries& prices, PenaltyPrice penalty,
                             std::uint64_t seed, std::vector<DayTraceRow>* trace) {
    if (prices.horizon() < 2) throw HorizonTooShort(prices.horizon());
    population.check_subset(subset);

    HorizonResult result;
    ConsumptionDay yesterday = realize_day(population, 1, seed);
    for (int day = 2; day <= prices.horizon(); ++day) {
        const ConsumptionDay today = realize_day(population, day, seed);
        const auto baseline =
            persistence_baseline(aggregate_consumption(population, yesterday, subset));
        const auto bid = form_bid(baseline);
        const auto actual = aggregate_consumption(population, today, subset);
        const auto failing = aggregate_failing(population, today, subset);
        const DaySettlement s = settle_day(bid, actual, failing,
                                           prices.day_prices(day),
                                           activation_mask(prices, day), penalty);
        result.totals += s.profit;
        for (int h = 0; h < 24; ++h) result.shortfall_kwh += s.position.shortfall[h];
        if (trace) trace->push_back({day, s.profit});
        yesterday = today;
    }
    return result;
}

std::vector<ProfitBreakdown> settle_individual(const AssetPopulation& population,
                                               const PriceSeries& prices,
                                               PenaltyPrice penalty,
                                               std::uint64_t seed) {
    if (prices.horizon() < 2) throw HorizonTooShort(prices.horizon());

    std::vector<ProfitBreakdown> result(population.n_assets());
    for (int day = 2; day <= prices.horizon(); ++day) {
        const DayPrices dp = prices.day_prices(day);
        const ActivationMask mask = activation_mask(prices, day);
        for (AssetId a = 0; a < population.n_assets(); ++a) {
            // 1 kW bid at yesterday's hour; delivery iff today's hour matches
            // and the asset is not owned by an always-fail demand.
            const int y = rng::uniform_hour(seed, day - 1, a) - 1;
            const int t = rng::uniform_hour(seed, day, a) - 1;
            ProfitBreakdown& pb = result[a];
            pb.reservation += dp.mfrr[y];
            if (mask.active[y]) {
                if (t == y && !population.fails(a))
                    pb.activation += dp.balancing[y];
                else
                    pb.penalty += penalty.value;
            }
        }
    }
    return result;
}

} // namespace flexcoal
