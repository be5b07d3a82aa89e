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

#ifndef FLEXCOAL_SWEEP_HPP
#define FLEXCOAL_SWEEP_HPP

#include <cstdint>
#include <vector>

#include "flexcoal/assets.hpp"
#include "flexcoal/prices.hpp"
#include "flexcoal/shapley.hpp"

namespace flexcoal {

/// One penalty-price grid point: the four payment series that show whether
/// the flagged demand and the rest of the coalition prefer membership.
struct PenaltySweepPoint {
    double penalty = 0.0;
    double excluded_in_coalition = 0.0;  // Shapley payment to the flagged demand inside the grand coalition
    double rest_in_coalition = 0.0;      // payment to everyone else inside the grand coalition
    double rest_without_excluded = 0.0;  // value of the coalition formed without the flagged demand
    double excluded_alone = 0.0;         // stand-alone value of the flagged demand
};

/// Re-settles the coalition game at each penalty price and reports the four
/// series. With `reprice_fast`, all subsets are settled once and only the
/// penalty term is re-priced per grid point (reservation, activation and
/// shortfall quantities do not depend on the penalty); both paths agree to
/// floating-point accumulation error.
std::vector<PenaltySweepPoint> penalty_sweep(const AssetPopulation& population,
                                             const PriceSeries& prices,
                                             std::uint64_t seed,
                                             const std::vector<double>& penalty_grid,
                                             DemandId excluded = 1,
                                             bool reprice_fast = false,
                                             int jobs = 1);

/// Default grid covering 0..3 DKK/kWh in 0.25 steps.
std::vector<double> default_penalty_grid();

} // namespace flexcoal

#endif // FLEXCOAL_SWEEP_HPP
