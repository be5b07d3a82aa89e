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

#ifndef FLEXCOAL_ASSETS_HPP
#define FLEXCOAL_ASSETS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "flexcoal/errors.hpp"

namespace flexcoal {

using AssetId = int;  // 0-based, dense
using DemandId = int; // 1-based

/// A set of demand ids as a bitmask (bit d-1 stands for demand d).
class DemandSet {
public:
    DemandSet() = default;
    explicit DemandSet(std::uint64_t bits) : bits_(bits) {}

    static DemandSet all(int n_demands) {
        return DemandSet(n_demands >= 64 ? ~0ULL : (1ULL << n_demands) - 1);
    }
    static DemandSet single(DemandId d) { return DemandSet(1ULL << (d - 1)); }

    void add(DemandId d) { bits_ |= 1ULL << (d - 1); }
    void remove(DemandId d) { bits_ &= ~(1ULL << (d - 1)); }
    bool contains(DemandId d) const { return bits_ >> (d - 1) & 1; }
    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcountll(bits_); }
    std::uint64_t bits() const { return bits_; }

    friend bool operator==(DemandSet, DemandSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// The fixed population of homogeneous 1-kW single-hour assets: how many
/// there are, which demand owns each one, and which demands never deliver
/// up-regulation. Immutable after build; shareable across threads.
class AssetPopulation {
public:
    /// Assets are assigned to demands in id order: the first split[0] assets
    /// to demand 1, the next split[1] to demand 2, and so on. With no
    /// explicit split each demand gets floor(n/|D|) assets and the remainder
    /// goes one each to the lowest demand ids.
    static AssetPopulation build(int n_assets, int n_demands,
                                 const std::optional<std::vector<int>>& split = {},
                                 DemandSet always_fail = {});

    int n_assets() const { return static_cast<int>(owner_.size()); }
    int n_demands() const { return n_demands_; }
    DemandId owner(AssetId a) const { return owner_[a]; }
    DemandSet always_fail() const { return always_fail_; }
    bool fails(AssetId a) const { return always_fail_.contains(owner_[a]); }

    /// Throws UnknownDemand if `subset` names a demand outside 1..n_demands.
    void check_subset(DemandSet subset) const;

private:
    int n_demands_ = 0;
    std::vector<DemandId> owner_; // indexed by AssetId
    DemandSet always_fail_;
};

/// The realized consumption of every asset on one day: the single hour
/// (1..24) in which it draws its 1 kW.
struct ConsumptionDay {
    int day = 0;
    std::vector<std::uint8_t> hour_of; // indexed by AssetId
};

/// Draws each asset's consumption hour uniformly from {1..24}. The draw for
/// (asset, day) is a pure function of (seed, day, AssetId): re-invocation is
/// bit-identical and draws are independent across days.
ConsumptionDay realize_day(const AssetPopulation& population, int day,
                           std::uint64_t seed);

/// Hourly kW consumed by the assets of `subset` (index 0 == hour 1). Entry h
/// is the count of subset-owned assets whose hour is h; the total equals the
/// subset's asset count.
std::array<double, 24> aggregate_consumption(const AssetPopulation& population,
                                             const ConsumptionDay& cd,
                                             DemandSet subset);

/// Same, restricted to assets of always-fail demands within `subset`. These
/// consume but cannot curtail.
std::array<double, 24> aggregate_failing(const AssetPopulation& population,
                                         const ConsumptionDay& cd,
                                         DemandSet subset);

/// Debug export, one row per asset: `asset,demand,day,hour`.
void export_consumption_csv(std::ostream& out, const AssetPopulation& population,
                            const ConsumptionDay& cd);

} // namespace flexcoal

#endif // FLEXCOAL_ASSETS_HPP
