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

#ifndef FLEXCOAL_ERRORS_HPP
#define FLEXCOAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flexcoal {

/// Base class for all flexcoal domain errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- price ingestion ---

class EmptySource : public Error {
public:
    EmptySource() : Error("price source contains no data rows") {}
};

class SchemaMismatch : public Error {
public:
    explicit SchemaMismatch(const std::string& column)
        : Error("required column not found in header: " + column) {}
};

class MissingHour : public Error {
public:
    MissingHour(int day, int n_rows)
        : Error("day " + std::to_string(day) + " has " + std::to_string(n_rows) +
                " rows, expected 24"),
          day(day) {}
    int day;
};

class NonNumericPrice : public Error {
public:
    NonNumericPrice(int line, const std::string& field, const std::string& token)
        : Error("non-numeric value for '" + field + "' on line " +
                std::to_string(line) + ": '" + token + "'") {}
};

class DuplicateRecord : public Error {
public:
    DuplicateRecord(int day, int hour)
        : Error("duplicate record for day " + std::to_string(day) + ", hour " +
                std::to_string(hour)),
          day(day), hour(hour) {}
    int day;
    int hour;
};

class DayOutOfRange : public Error {
public:
    DayOutOfRange(int day, int horizon)
        : Error("day " + std::to_string(day) + " outside horizon 1.." +
                std::to_string(horizon)),
          day(day) {}
    int day;
};

// --- asset population ---

class SplitMismatch : public Error {
public:
    SplitMismatch(int split_sum, int n_assets)
        : Error("ownership split sums to " + std::to_string(split_sum) +
                ", expected " + std::to_string(n_assets)) {}
};

class UnknownDemand : public Error {
public:
    explicit UnknownDemand(int demand)
        : Error("demand id " + std::to_string(demand) + " not in population"),
          demand(demand) {}
    int demand;
};

// --- settlement ---

class NegativeQuantity : public Error {
public:
    NegativeQuantity(const std::string& what_vector, int hour)
        : Error("negative quantity in '" + what_vector + "' at hour " +
                std::to_string(hour)) {}
};

class VectorLengthMismatch : public Error {
public:
    explicit VectorLengthMismatch(const std::string& detail)
        : Error("hourly vector length mismatch: " + detail) {}
};

class HorizonTooShort : public Error {
public:
    explicit HorizonTooShort(int horizon)
        : Error("horizon of " + std::to_string(horizon) +
                " day(s) too short; need at least 2 (day 1 seeds the baseline)") {}
};

// --- shapley ---

class TooManyDemands : public Error {
public:
    explicit TooManyDemands(int n)
        : Error("exact characteristic table capped at 20 demands, got " +
                std::to_string(n)) {}
};

class IncompleteTable : public Error {
public:
    explicit IncompleteTable(const std::string& detail)
        : Error("characteristic table incomplete: " + detail) {}
};

} // namespace flexcoal

#endif // FLEXCOAL_ERRORS_HPP
