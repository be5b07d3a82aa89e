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

#ifndef FLEXCOAL_RNG_HPP
#define FLEXCOAL_RNG_HPP

#include <cstdint>

namespace flexcoal::rng {

/// Counter-based pseudo-random draws. Every draw is a pure function of the
/// key it is given, so the same (seed, day, asset) tuple yields the same
/// value no matter which subset simulation asks for it, and no global state
/// is involved.

// splitmix64 finalizer
constexpr std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t hash(std::uint64_t seed, std::uint64_t a,
                             std::uint64_t b = 0, std::uint64_t c = 0) {
    return mix(mix(mix(mix(seed) ^ a) ^ b) ^ c);
}

/// Uniform double in [0, 1) from a keyed draw.
constexpr double uniform01(std::uint64_t seed, std::uint64_t a,
                           std::uint64_t b = 0, std::uint64_t c = 0) {
    return static_cast<double>(hash(seed, a, b, c) >> 11) * 0x1.0p-53;
}

/// The hour (1..24) asset `asset` consumes its 1 kW on `day`.
constexpr int uniform_hour(std::uint64_t seed, int day, int asset) {
    return 1 + static_cast<int>(hash(seed, static_cast<std::uint64_t>(day),
                                     static_cast<std::uint64_t>(asset)) % 24);
}

} // namespace flexcoal::rng

#endif // FLEXCOAL_RNG_HPP
