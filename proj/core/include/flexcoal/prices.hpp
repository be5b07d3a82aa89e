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

#ifndef FLEXCOAL_PRICES_HPP
#define FLEXCOAL_PRICES_HPP

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "flexcoal/errors.hpp"

namespace flexcoal {

/// One hour of market prices. Units are DKK/kWh for spot and balancing and
/// DKK per kW per hour for the reserve-capacity price. Negative prices are
/// valid (DK1 spot prices go negative).
struct PriceRecord {
    int day = 0;            // 1-based
    int hour = 0;           // 1..24
    double spot = 0.0;      // day-ahead energy price
    double balancing = 0.0; // up-regulation energy price
    double mfrr = 0.0;      // reserve capacity price
};

/// Prices for a single day, as hour-indexed arrays (index 0 == hour 1).
struct DayPrices {
    std::array<double, 24> spot{};
    std::array<double, 24> balancing{};
    std::array<double, 24> mfrr{};
};

/// Which hours of a day the TSO activates the reserve. Activation happens
/// exactly when the balancing price strictly exceeds the spot price; a tie
/// means no activation.
struct ActivationMask {
    int day = 0;
    std::array<bool, 24> active{};
};

/// A contiguous multi-day hourly price series, days numbered 1..horizon.
class PriceSeries {
public:
    PriceSeries() = default;

    /// Takes ownership of records that are already sorted by (day, hour),
    /// complete (24 per day) and contiguous from day 1. Loaders are
    /// responsible for validation.
    explicit PriceSeries(std::vector<PriceRecord> records);

    int horizon() const { return horizon_; }

    const PriceRecord& at(int day, int hour) const;

    DayPrices day_prices(int day) const;

    const std::vector<PriceRecord>& records() const { return records_; }

private:
    void check_day(int day) const;

    std::vector<PriceRecord> records_;
    int horizon_ = 0;
};

/// Column-name mapping for delimited price files. Defaults match the
/// canonical header `day,hour,spot,balancing,mfrr`.
struct CsvSchema {
    std::string day = "day";
    std::string hour = "hour";
    std::string spot = "spot";
    std::string balancing = "balancing";
    std::string mfrr = "mfrr";
};

/// Parses a comma-delimited price file with a header row. Rows may appear in
/// any order; days may start at any index and are renumbered to begin at 1.
/// `price_scale` multiplies all three price columns on ingestion (use 0.001
/// for data exported in DKK/MWh).
///
/// Throws EmptySource, SchemaMismatch, NonNumericPrice, DuplicateRecord or
/// MissingHour.
PriceSeries load_prices(std::istream& source, const CsvSchema& schema = {},
                        double price_scale = 1.0);

/// Writes the canonical CSV format; load_prices(save_prices(s)) == s.
void save_prices(std::ostream& out, const PriceSeries& series);

/// Per-hour activation flags for one day: active iff balancing > spot.
ActivationMask activation_mask(const PriceSeries& prices, int day);

/// Deterministic synthetic price series for tests and CI. The fraction of
/// hours with balancing > spot converges to `activation_rate`; spot, mfrr
/// and balancing prices are all nonnegative by construction.
PriceSeries generate_synthetic_prices(std::uint64_t seed, int days,
                                      double activation_rate);

} // namespace flexcoal

#endif // FLEXCOAL_PRICES_HPP
