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

#include "flexcoal/shapley.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "flexcoal/parallel.hpp"

namespace flexcoal {

namespace {

// Shapley weight for a subset of size s (containing the player) in an
// n-player game: (s-1)!(n-s)!/n! == 1 / (n * C(n-1, s-1)). The binomials fit
// a double exactly for n <= 20, so no factorials are ever materialized.
std::vector<double> subset_weights(int n) {
    std::vector<double> w(n + 1, 0.0);
    double binom = 1.0; // C(n-1, s-1), folded incrementally
    for (int s = 1; s <= n; ++s) {
        w[s] = 1.0 / (n * binom);
        binom = binom * (n - s) / s;
    }
    return w;
}

void check_table(const CharacteristicTable& table) {
    if (table.n_demands < 1)
        throw IncompleteTable("no demands");
    if (table.values.size() != (1ULL << table.n_demands))
        throw IncompleteTable("have " + std::to_string(table.values.size()) +
                              " entries, need " +
                              std::to_string(1ULL << table.n_demands));
    if (table.values[0] != 0.0) throw IncompleteTable("v(empty) != 0");
}

} // namespace

CharacteristicTable characteristic_table(const AssetPopulation& population,
                                         const PriceSeries& prices,
                                         PenaltyPrice penalty, std::uint64_t seed,
                                         int jobs) {
    const int n = population.n_demands();
    if (n > 20) throw TooManyDemands(n);
    if (prices.horizon() < 2) throw HorizonTooShort(prices.horizon());

    CharacteristicTable table;
    table.n_demands = n;
    table.values.assign(1ULL << n, 0.0);
    // Shared seed across subsets: each demand's assets behave identically in
    // every coalition containing it, which is what makes v a characteristic
    // function rather than a stochastic draw.
    parallel_for_index((1LL << n) - 1, jobs, [&](std::int64_t i) {
        const std::uint64_t mask = static_cast<std::uint64_t>(i) + 1;
        table.values[mask] =
            settle_horizon(population, DemandSet(mask), prices, penalty, seed)
                .totals.total();
    });
    return table;
}

Allocation exact_shapley(const CharacteristicTable& table) {
    check_table(table);
    const int n = table.n_demands;
    const auto w = subset_weights(n);

    Allocation alloc;
    alloc.mode = AllocationMode::exact;
    alloc.grand_value = table.grand_value();
    alloc.subsets_evaluated = (1ULL << n) - 1;
    for (DemandId d = 1; d <= n; ++d) {
        const std::uint64_t bit = 1ULL << (d - 1);
        double phi = 0.0;
        for (std::uint64_t mask = 1; mask < table.values.size(); ++mask) {
            if (!(mask & bit)) continue;
            const int s = __builtin_popcountll(mask);
            phi += w[s] * (table.values[mask] - table.values[mask ^ bit]);
        }
        alloc.payments[d] = phi;
    }
    return alloc;
}

Allocation sampled_shapley(const std::function<double(std::uint64_t)>& value_fn,
                           int n_demands, int m_samples,
                           std::uint64_t sample_seed, bool exhaustive) {
    const int n = n_demands;
    std::vector<double> sum(n, 0.0), sumsq(n, 0.0);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::uint64_t evaluations = 0;
    std::uint64_t n_perms = 0;

    auto accumulate_order = [&](const std::vector<int>& perm) {
        std::uint64_t mask = 0;
        double prev = 0.0; // v(empty) == 0
        for (int idx : perm) {
            mask |= 1ULL << idx;
            const double cur = value_fn(mask);
            ++evaluations;
            const double marginal = cur - prev;
            sum[idx] += marginal;
            sumsq[idx] += marginal * marginal;
            prev = cur;
        }
        ++n_perms;
    };

    if (exhaustive) {
        std::sort(order.begin(), order.end());
        do {
            accumulate_order(order);
        } while (std::next_permutation(order.begin(), order.end()));
    } else {
        std::mt19937_64 gen(sample_seed);
        for (int m = 0; m < m_samples; ++m) {
            std::shuffle(order.begin(), order.end(), gen);
            accumulate_order(order);
        }
    }

    Allocation alloc;
    alloc.mode = AllocationMode::sampled;
    alloc.grand_value = value_fn((1ULL << n) - 1);
    alloc.samples = n_perms;
    alloc.sample_seed = sample_seed;
    alloc.subsets_evaluated = evaluations;
    const double m = static_cast<double>(n_perms);
    for (DemandId d = 1; d <= n; ++d) {
        const double mean = sum[d - 1] / m;
        alloc.payments[d] = mean;
        const double var = std::max(0.0, sumsq[d - 1] / m - mean * mean);
        alloc.std_errors[d] = n_perms > 1 ? std::sqrt(var / (m - 1.0)) : 0.0;
    }
    return alloc;
}

Allocation leave_one_out(const CharacteristicTable& table, DemandId excluded) {
    check_table(table);
    const int n = table.n_demands;
    if (excluded < 1 || excluded > n) throw UnknownDemand(excluded);

    // Restrict the table to subsets avoiding `excluded`, compacting the
    // bitmask around the removed bit.
    CharacteristicTable sub;
    sub.n_demands = n - 1;
    sub.values.assign(1ULL << (n - 1), 0.0);
    const std::uint64_t low = (1ULL << (excluded - 1)) - 1;
    for (std::uint64_t m = 0; m < sub.values.size(); ++m) {
        const std::uint64_t full = (m & low) | ((m & ~low) << 1);
        sub.values[m] = table.values[full];
    }

    Allocation inner = exact_shapley(sub);
    Allocation alloc;
    alloc.mode = AllocationMode::exact;
    alloc.grand_value = inner.grand_value;
    alloc.subsets_evaluated = inner.subsets_evaluated;
    for (const auto& [d, phi] : inner.payments)
        alloc.payments[d < excluded ? d : d + 1] = phi;
    return alloc;
}

} // namespace flexcoal
