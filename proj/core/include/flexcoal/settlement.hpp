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

#ifndef FLEXCOAL_SETTLEMENT_HPP
#define FLEXCOAL_SETTLEMENT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "flexcoal/assets.hpp"
#include "flexcoal/errors.hpp"
#include "flexcoal/prices.hpp"

namespace flexcoal {

/// The three profit terms of a settlement: capacity payment for the reserve
/// bid, energy payment for delivered up-regulation, and the penalty on
/// undelivered promises. total() == reservation + activation - penalty by
/// construction, also after summation.
struct ProfitBreakdown {
    double reservation = 0.0;
    double activation = 0.0;
    double penalty = 0.0;

    double total() const { return reservation + activation - penalty; }

    ProfitBreakdown& operator+=(const ProfitBreakdown& o) {
        reservation += o.reservation;
        activation += o.activation;
        penalty += o.penalty;
        return *this;
    }
};

/// Constant penalty price per kWh of shortfall. Nonnegative.
struct PenaltyPrice {
    explicit PenaltyPrice(double v) : value(v) {
        if (v < 0.0) throw NegativeQuantity("penalty price", 0);
    }
    double value;
};

/// Full hourly state of one settled day for one demand subset.
struct DailyPosition {
    int day = 0;
    std::array<double, 24> baseline{};
    std::array<double, 24> bid{};
    std::array<double, 24> actual{};
    std::array<double, 24> delivered{};
    std::array<double, 24> shortfall{};
};

struct DaySettlement {
    DailyPosition position;
    ProfitBreakdown profit;
};

/// Persistence forecast: tomorrow's baseline is yesterday's realized
/// pattern, unchanged.
std::array<double, 24> persistence_baseline(const std::array<double, 24>& yesterday);

/// Capacity bid sizing: the full baseline is offered as reserve.
std::array<double, 24> form_bid(const std::array<double, 24>& baseline);

/// Settles one day. For an activated hour, delivered up-regulation is
/// min(bid, actual - failing) and the remainder of the bid is shortfall;
/// non-activated hours deliver nothing and owe nothing. The reserve payment
/// accrues on the bid regardless of activation.
///
/// Throws NegativeQuantity if any input quantity is negative or
/// failing > actual in some hour.
DaySettlement settle_day(const std::array<double, 24>& bid,
                         const std::array<double, 24>& actual,
                         const std::array<double, 24>& failing,
                         const DayPrices& prices, const ActivationMask& mask,
                         PenaltyPrice penalty);

/// One row of a horizon settlement trace.
struct DayTraceRow {
    int day = 0;
    ProfitBreakdown profit;
};

struct HorizonResult {
    ProfitBreakdown totals;
    double shortfall_kwh = 0.0; // summed over hours and days
};

/// Settles a demand subset over days 2..horizon. Day d's bid is day d-1's
/// realized subset aggregate; day 1 only seeds the baseline. Deterministic
/// given the seed. Pass `trace` to collect per-day breakdowns.
///
/// Throws HorizonTooShort when horizon < 2, UnknownDemand for a subset
/// member outside the population.
HorizonResult settle_horizon(const AssetPopulation& population, DemandSet subset,
                             const PriceSeries& prices, PenaltyPrice penalty,
                             std::uint64_t seed,
                             std::vector<DayTraceRow>* trace = nullptr);

/// Settles every asset in isolation over the same horizon and the same
/// realizations as the coalition run (same seed): each asset bids 1 kW at
/// yesterday's hour and delivers iff today's hour matches and it is not an
/// always-fail asset. Indexed by AssetId.
std::vector<ProfitBreakdown> settle_individual(const AssetPopulation& population,
                                               const PriceSeries& prices,
                                               PenaltyPrice penalty,
                                               std::uint64_t seed);

} // namespace flexcoal

#endif // FLEXCOAL_SETTLEMENT_HPP
