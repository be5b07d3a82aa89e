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

#ifndef FLEXCOAL_SYNERGY_HPP
#define FLEXCOAL_SYNERGY_HPP

#include <cstdint>
#include <vector>

#include "flexcoal/prices.hpp"
#include "flexcoal/settlement.hpp"

namespace flexcoal {

/// Coalition profit over the sum of stand-alone per-asset profits, at one
/// portfolio size. A zero denominator is flagged, never fabricated; ratio is
/// NaN in that case.
struct SynergyPoint {
    int n_assets = 0;
    double coalition_profit = 0.0;
    double sum_individual_profit = 0.0;
    double ratio = 0.0;
    bool zero_denominator = false;
};

struct SynergyCurve {
    std::vector<SynergyPoint> points;       // ordered by n_assets
    std::vector<double> rolling_mean;       // window-averaged ratios
};

/// Evaluates the profit ratio at one portfolio size. Numerator and
/// denominator see the same consumption realizations (same seed).
SynergyPoint synergy_at(int n_assets, const PriceSeries& prices,
                        PenaltyPrice penalty, std::uint64_t seed);

/// One point per entry of the strictly increasing `n_grid`. Populations are
/// nested across grid points: the n-asset population is a prefix of the
/// (n+1)-asset one, so the curve isolates the size effect. rolling_mean[k]
/// averages the last min(k+1, window) ratios.
SynergyCurve synergy_curve(const std::vector<int>& n_grid,
                           const PriceSeries& prices, PenaltyPrice penalty,
                           std::uint64_t seed, int window = 40, int jobs = 1);

} // namespace flexcoal

#endif // FLEXCOAL_SYNERGY_HPP
