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

#include "flexcoal/sweep.hpp"

#include <numeric>

#include "flexcoal/parallel.hpp"
#include "flexcoal/settlement.hpp"

namespace flexcoal {

namespace {

PenaltySweepPoint point_from_table(const CharacteristicTable& table,
                                   double penalty, DemandId excluded) {
    const Allocation alloc = exact_shapley(table);
    const Allocation loo = leave_one_out(table, excluded);

    PenaltySweepPoint p;
    p.penalty = penalty;
    p.excluded_in_coalition = alloc.payments.at(excluded);
    p.rest_in_coalition = alloc.grand_value - p.excluded_in_coalition;
    p.rest_without_excluded = std::accumulate(
        loo.payments.begin(), loo.payments.end(), 0.0,
        [](double acc, const auto& kv) { return acc + kv.second; });
    p.excluded_alone = table.value(1ULL << (excluded - 1));
    return p;
}

} // namespace

std::vector<double> default_penalty_grid() {
    std::vector<double> grid;
    for (int k = 0; k <= 12; ++k) grid.push_back(0.25 * k);
    return grid;
}

std::vector<PenaltySweepPoint> penalty_sweep(const AssetPopulation& population,
                                             const PriceSeries& prices,
                                             std::uint64_t seed,
                                             const std::vector<double>& penalty_grid,
                                             DemandId excluded, bool reprice_fast,
                                             int jobs) {
    const int n = population.n_demands();
    if (n > 20) throw TooManyDemands(n);
    if (excluded < 1 || excluded > n) throw UnknownDemand(excluded);

    std::vector<PenaltySweepPoint> points(penalty_grid.size());

    if (reprice_fast) {
        // Reservation, activation and shortfall quantity of a subset do not
        // depend on the penalty price, so one settlement pass per subset is
        // enough; each grid point just re-prices the shortfall.
        struct SubsetTerms {
            double reservation = 0.0;
            double activation = 0.0;
            double shortfall_kwh = 0.0;
        };
        std::vector<SubsetTerms> terms(1ULL << n);
        parallel_for_index((1LL << n) - 1, jobs, [&](std::int64_t i) {
            const std::uint64_t mask = static_cast<std::uint64_t>(i) + 1;
            const HorizonResult r = settle_horizon(population, DemandSet(mask),
                                                   prices, PenaltyPrice(0.0), seed);
            terms[mask] = {r.totals.reservation, r.totals.activation, r.shortfall_kwh};
        });
        for (std::size_t g = 0; g < penalty_grid.size(); ++g) {
            const double lambda_p = penalty_grid[g];
            CharacteristicTable table;
            table.n_demands = n;
            table.values.assign(1ULL << n, 0.0);
            for (std::uint64_t mask = 1; mask < table.values.size(); ++mask) {
                const SubsetTerms& t = terms[mask];
                table.values[mask] =
                    t.reservation + t.activation - lambda_p * t.shortfall_kwh;
            }
            points[g] = point_from_table(table, lambda_p, excluded);
        }
    } else {
        for (std::size_t g = 0; g < penalty_grid.size(); ++g) {
            const CharacteristicTable table = characteristic_table(
                population, prices, PenaltyPrice(penalty_grid[g]), seed, jobs);
            points[g] = point_from_table(table, penalty_grid[g], excluded);
        }
    }
    return points;
}

} // namespace flexcoal
