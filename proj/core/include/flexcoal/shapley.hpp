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

#ifndef FLEXCOAL_SHAPLEY_HPP
#define FLEXCOAL_SHAPLEY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "flexcoal/assets.hpp"
#include "flexcoal/prices.hpp"
#include "flexcoal/settlement.hpp"

namespace flexcoal {

/// The characteristic function of the coalition game: v(S) for every demand
/// subset S, indexed by bitmask. v(empty) = 0. Complete over all 2^n subsets.
struct CharacteristicTable {
    int n_demands = 0;
    std::vector<double> values; // values[mask], size 1 << n_demands

    double value(std::uint64_t mask) const { return values[mask]; }
    std::uint64_t grand_mask() const { return (1ULL << n_demands) - 1; }
    double grand_value() const { return values[grand_mask()]; }
};

enum class AllocationMode { exact, sampled };

/// Per-demand payments. In exact mode efficiency (sum == grand value) holds
/// by construction; in sampled mode the estimator is unbiased and standard
/// errors are reported instead of forcing the budget to balance.
struct Allocation {
    AllocationMode mode = AllocationMode::exact;
    double grand_value = 0.0;
    std::map<DemandId, double> payments;
    std::map<DemandId, double> std_errors; // sampled mode only
    std::uint64_t subsets_evaluated = 0;   // characteristic evaluations behind this allocation
    std::uint64_t samples = 0;             // sampled mode only
    std::uint64_t sample_seed = 0;         // sampled mode only
};

/// Settles every demand subset under identical realizations (one shared
/// seed, counter-based draws keyed by asset id) so that v is a well-defined
/// deterministic function of the subset. Throws TooManyDemands above 20.
CharacteristicTable characteristic_table(const AssetPopulation& population,
                                         const PriceSeries& prices,
                                         PenaltyPrice penalty, std::uint64_t seed,
                                         int jobs = 1);

/// Exact Shapley payments: the factorially weighted sum of marginal
/// contributions over all subsets. Throws IncompleteTable if the table does
/// not cover all subsets or v(empty) != 0.
Allocation exact_shapley(const CharacteristicTable& table);

/// Permutation-sampling estimate of the Shapley payments for games too large
/// to tabulate: averages each demand's marginal contribution over m
/// uniformly drawn join orders. With `exhaustive` set, all n! permutations
/// are enumerated instead and the result equals exact_shapley.
Allocation sampled_shapley(const std::function<double(std::uint64_t)>& value_fn,
                           int n_demands, int m_samples,
                           std::uint64_t sample_seed, bool exhaustive = false);

/// Exact Shapley payments of the sub-game on all demands except `excluded`;
/// every needed v(S) is already in the table. Throws UnknownDemand.
Allocation leave_one_out(const CharacteristicTable& table, DemandId excluded);

} // namespace flexcoal

#endif // FLEXCOAL_SHAPLEY_HPP
