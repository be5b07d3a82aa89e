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

#include "flexcoal/synergy.hpp"

#include <limits>

#include "flexcoal/assets.hpp"
#include "flexcoal/parallel.hpp"

namespace flexcoal {

SynergyPoint synergy_at(int n_assets, const PriceSeries& prices,
                        PenaltyPrice penalty, std::uint64_t seed) {
    // A single demand owning everything; asset ids 0..n-1, so populations of
    // increasing size are prefixes of each other under the keyed draws.
    const auto pop = AssetPopulation::build(n_assets, 1);

    SynergyPoint p;
    p.n_assets = n_assets;
    p.coalition_profit =
        settle_horizon(pop, DemandSet::all(1), prices, penalty, seed).totals.total();
    for (const auto& pb : settle_individual(pop, prices, penalty, seed))
        p.sum_individual_profit += pb.total();

    if (p.sum_individual_profit == 0.0) {
        p.zero_denominator = true;
        p.ratio = std::numeric_limits<double>::quiet_NaN();
    } else {
        p.ratio = p.coalition_profit / p.sum_individual_profit;
    }
    return p;
}

SynergyCurve synergy_curve(const std::vector<int>& n_grid,
                           const PriceSeries& prices, PenaltyPrice penalty,
                           std::uint64_t seed, int window, int jobs) {
    SynergyCurve curve;
    curve.points.resize(n_grid.size());
    parallel_for_index(static_cast<std::int64_t>(n_grid.size()), jobs, [&](std::int64_t i) {
        curve.points[i] = synergy_at(n_grid[i], prices, penalty, seed);
    });

    curve.rolling_mean.resize(curve.points.size());
    for (std::size_t k = 0; k < curve.points.size(); ++k) {
        const std::size_t w = std::min<std::size_t>(k + 1, static_cast<std::size_t>(window));
        double sum = 0.0;
        for (std::size_t j = k + 1 - w; j <= k; ++j) sum += curve.points[j].ratio;
        curve.rolling_mean[k] = sum / static_cast<double>(w);
    }
    return curve;
}

} // namespace flexcoal
