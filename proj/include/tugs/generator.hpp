// Copyright 2026 The tugs Authors
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

#ifndef TUGS_GENERATOR_HPP
#define TUGS_GENERATOR_HPP

#include "tugs/instance_io.hpp"
#include "tugs/procedures.hpp"

#include <cstdint>
#include <string_view>

namespace tugs {

enum class InstanceClass { general, superadditive, monotone, simple, airport };

std::string_view to_string(InstanceClass c);
InstanceClass parse_instance_class(std::string_view name);

inline constexpr std::size_t kMaxGeneratedPlayers = 4;
inline constexpr std::size_t kMaxGeneratedStrategies = 3;

/// Random family for property suites. Deterministic in all arguments: each
/// player gets 1..max_strategies strategies, and every table game is built
/// to belong to the class (superadditive by dominating every two-block
/// split, monotone by running maxima, simple as monotone 0/1 with
/// worth(N) = 1, airport as max of nonnegative singleton costs).
/// Players are named "1".."n", strategies "A", "B", "C".
Instance generate_instance(std::uint64_t seed, std::size_t n, std::size_t max_strategies, InstanceClass cls);

/// Deterministic test allocations for the core-intersection check, all
/// efficient for the guarantee transform: vertices of the transform's core
/// and of the guarantee games' cores, midpoints of those, nudged copies and
/// random efficient points.
std::vector<Allocation> sample_allocations(const GameWithStrategies& gws, std::size_t count, std::uint64_t seed);

}  // namespace tugs

#endif  // TUGS_GENERATOR_HPP
