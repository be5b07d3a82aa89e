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

#include "flexcoal/prices.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>

#include "flexcoal/rng.hpp"

namespace flexcoal {

PriceSeries::PriceSeries(std::vector<PriceRecord> records)
    : records_(std::move(records)),
      horizon_(static_cast<int>(records_.size() / 24)) {}

void PriceSeries::check_day(int day) const {
    if (day < 1 || day > horizon_) throw DayOutOfRange(day, horizon_);
}

const PriceRecord& PriceSeries::at(int day, int hour) const {
    check_day(day);
    return records_[static_cast<std::size_t>(day - 1) * 24 + (hour - 1)];
}

DayPrices PriceSeries::day_prices(int day) const {
    check_day(day);
    DayPrices dp;
    for (int h = 0; h < 24; ++h) {
        const PriceRecord& r = records_[static_cast<std::size_t>(day - 1) * 24 + h];
        dp.spot[h] = r.spot;
        dp.balancing[h] = r.balancing;
        dp.mfrr[h] = r.mfrr;
    }
    return dp;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        std::string field = line.substr(start, comma - start);
        if (!field.empty() && field.back() == '\r') field.pop_back();
        out.push_back(std::move(field));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

double parse_number(const std::string& token, int line_no, const std::string& field) {
    double value{};
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value))
        throw NonNumericPrice(line_no, field, token);
    return value;
}

int parse_int(const std::string& token, int line_no, const std::string& field) {
    int value{};
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw NonNumericPrice(line_no, field, token);
    return value;
}

std::size_t column_index(const std::vector<std::string>& header,
                         const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw SchemaMismatch(name);
    return static_cast<std::size_t>(it - header.begin());
}

} // namespace

PriceSeries load_prices(std::istream& source, const CsvSchema& schema,
                        double price_scale) {
    std::string line;
    if (!std::getline(source, line)) throw EmptySource();
    const auto header = split_line(line);
    const std::size_t c_day = column_index(header, schema.day);
    const std::size_t c_hour = column_index(header, schema.hour);
    const std::size_t c_spot = column_index(header, schema.spot);
    const std::size_t c_bal = column_index(header, schema.balancing);
    const std::size_t c_mfrr = column_index(header, schema.mfrr);
    const std::size_t width = header.size();

    std::vector<PriceRecord> rows;
    int line_no = 1;
    while (std::getline(source, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_line(line);
        if (fields.size() != width)
            throw NonNumericPrice(line_no, "row",
                                  "expected " + std::to_string(width) + " fields, got " +
                                      std::to_string(fields.size()));
        PriceRecord r;
        r.day = parse_int(fields[c_day], line_no, schema.day);
        r.hour = parse_int(fields[c_hour], line_no, schema.hour);
        r.spot = parse_number(fields[c_spot], line_no, schema.spot) * price_scale;
        r.balancing = parse_number(fields[c_bal], line_no, schema.balancing) * price_scale;
        r.mfrr = parse_number(fields[c_mfrr], line_no, schema.mfrr) * price_scale;
        rows.push_back(r);
    }
    if (rows.empty()) throw EmptySource();

    std::stable_sort(rows.begin(), rows.end(), [](const PriceRecord& a, const PriceRecord& b) {
        return a.day != b.day ? a.day < b.day : a.hour < b.hour;
    });

    // Group by day, demanding exactly hours 1..24 per day and contiguous days.
    std::map<int, int> rows_per_day;
    for (const auto& r : rows) ++rows_per_day[r.day];
    int expected_day = rows.front().day;
    for (const auto& [day, count] : rows_per_day) {
        if (day != expected_day) throw MissingHour(expected_day, 0);
        if (count != 24) {
            // Distinguish duplicates from gaps.
            if (count > 24) {
                for (std::size_t i = 1; i < rows.size(); ++i)
                    if (rows[i].day == day && rows[i - 1].day == day &&
                        rows[i].hour == rows[i - 1].hour)
                        throw DuplicateRecord(day, rows[i].hour);
            }
            throw MissingHour(day, count);
        }
        ++expected_day;
    }
    const int first_day = rows.front().day;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int day = first_day + static_cast<int>(i / 24);
        const int hour = static_cast<int>(i % 24) + 1;
        if (rows[i].day != day || rows[i].hour != hour) {
            if (i > 0 && rows[i].day == rows[i - 1].day && rows[i].hour == rows[i - 1].hour)
                throw DuplicateRecord(rows[i].day, rows[i].hour);
            throw MissingHour(day, 24); // hour gap with a duplicate elsewhere in the day
        }
        rows[i].day = day - first_day + 1; // renumber so days start at 1
    }
    return PriceSeries(std::move(rows));
}

void save_prices(std::ostream& out, const PriceSeries& series) {
    out << "day,hour,spot,balancing,mfrr\n";
    char buf[128];
    for (const auto& r : series.records()) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%.17g\n", r.day, r.hour,
                      r.spot, r.balancing, r.mfrr);
        out << buf;
    }
}

ActivationMask activation_mask(const PriceSeries& prices, int day) {
    ActivationMask mask;
    mask.day = day;
    const DayPrices dp = prices.day_prices(day); // throws DayOutOfRange
    for (int h = 0; h < 24; ++h)
        mask.active[h] = dp.balancing[h] > dp.spot[h]; // strict; ties do not activate
    return mask;
}

namespace {

// Quantize to multiples of 2^-20. Synthetic prices with short significands
// make price*count products and their sums exact in double, so identities
// like "coalition reservation == sum of per-asset reservations" hold
// bit-exactly, not just to tolerance.
double quantize(double x) { return std::round(x * 1048576.0) / 1048576.0; }

} // namespace

PriceSeries generate_synthetic_prices(std::uint64_t seed, int days,
                                      double activation_rate) {
    std::vector<PriceRecord> rows;
    rows.reserve(static_cast<std::size_t>(days) * 24);
    for (int day = 1; day <= days; ++day) {
        for (int hour = 1; hour <= 24; ++hour) {
            const auto d = static_cast<std::uint64_t>(day);
            const auto h = static_cast<std::uint64_t>(hour);
            PriceRecord r;
            r.day = day;
            r.hour = hour;
            r.spot = quantize(0.2 + 0.8 * rng::uniform01(seed, d, h, 1));
            r.mfrr = quantize(0.05 + 0.3 * rng::uniform01(seed, d, h, 2));
            const bool activated = rng::uniform01(seed, d, h, 3) < activation_rate;
            const double delta = rng::uniform01(seed, d, h, 4);
            // Activated hours exceed spot strictly; the rest sit at or below
            // it, keeping balancing prices nonnegative (spot >= 0.2, the
            // non-activated markdown is at most 0.15).
            r.balancing = activated ? quantize(r.spot + 0.1 + 1.5 * delta)
                                    : r.spot - quantize(0.15 * delta);
            rows.push_back(r);
        }
    }
    return PriceSeries(std::move(rows));
}

} // namespace flexcoal
