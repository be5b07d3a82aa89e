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

#include "flexcoal/assets.hpp"

#include <numeric>

#include "flexcoal/rng.hpp"

namespace flexcoal {

AssetPopulation AssetPopulation::build(int n_assets, int n_demands,
                                       const std::optional<std::vector<int>>& split,
                                       DemandSet always_fail) {
    AssetPopulation pop;
    pop.n_demands_ = n_demands;
    pop.always_fail_ = always_fail;

    std::vector<int> sizes;
    if (split) {
        const int sum = std::accumulate(split->begin(), split->end(), 0);
        if (sum != n_assets) throw SplitMismatch(sum, n_assets);
        sizes = *split;
    } else {
        // floor(n/|D|) each, remainder to the lowest demand ids
        sizes.assign(n_demands, n_assets / n_demands);
        for (int d = 0; d < n_assets % n_demands; ++d) ++sizes[d];
    }

    for (DemandId d = 1; d <= static_cast<int>(sizes.size()); ++d)
        for (int k = 0; k < sizes[d - 1]; ++k) pop.owner_.push_back(d);

    for (DemandId d = 1; d <= 64; ++d)
        if (always_fail.contains(d) && d > n_demands) throw UnknownDemand(d);
    return pop;
}

void AssetPopulation::check_subset(DemandSet subset) const {
    if (n_demands_ < 64 && (subset.bits() >> n_demands_) != 0) {
        for (DemandId d = n_demands_ + 1; d <= 64; ++d)
            if (subset.contains(d)) throw UnknownDemand(d);
    }
}

ConsumptionDay realize_day(const AssetPopulation& population, int day,
                           std::uint64_t seed) {
    ConsumptionDay cd;
    cd.day = day;
    cd.hour_of.resize(population.n_assets());
    for (AssetId a = 0; a < population.n_assets(); ++a)
        cd.hour_of[a] = static_cast<std::uint8_t>(rng::uniform_hour(seed, day, a));
    return cd;
}

std::array<double, 24> aggregate_consumption(const AssetPopulation& population,
                                             const ConsumptionDay& cd,
                                             DemandSet subset) {
    population.check_subset(subset);
    std::array<double, 24> kw{};
    for (AssetId a = 0; a < population.n_assets(); ++a)
        if (subset.contains(population.owner(a))) kw[cd.hour_of[a] - 1] += 1.0;
    return kw;
}

std::array<double, 24> aggregate_failing(const AssetPopulation& population,
                                         const ConsumptionDay& cd,
                                         DemandSet subset) {
    population.check_subset(subset);
    std::array<double, 24> kw{};
    for (AssetId a = 0; a < population.n_assets(); ++a)
        if (population.fails(a) && subset.contains(population.owner(a)))
            kw[cd.hour_of[a] - 1] += 1.0;
    return kw;
}

void export_consumption_csv(std::ostream& out, const AssetPopulation& population,
                            const ConsumptionDay& cd) {
    out << "asset,demand,day,hour\n";
    for (AssetId a = 0; a < population.n_assets(); ++a)
        out << a << ',' << population.owner(a) << ',' << cd.day << ','
            << static_cast<int>(cd.hour_of[a]) << '\n';
}

} // namespace flexcoal
