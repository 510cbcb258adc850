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

#ifndef TUGS_CLASSES_HPP
#define TUGS_CLASSES_HPP

#include "tugs/procedures.hpp"

#include <optional>

namespace tugs {

// Airport games with strategies (one movement per player) and simple games
// with strategies.

/// Every table game is a cost game with nonnegative singleton costs and
/// worth(S) = max_{j in S} worth({j}).
bool is_airport_family(const GameWithStrategies& gws);

struct AirportCondition {
    bool holds = false;
    /// Smallest player i with psi(S) >= psi(N) for every S containing i.
    std::optional<Player> pivot;
    /// Airport game with d_i = min { psi(S) : i in S }; its core lies inside
    /// psi's core whenever the condition holds.
    std::optional<TUGame> minorant;
};

/// Sufficient condition for a balanced minmax transform of an airport family.
/// `psi` must be a cost game.
AirportCondition airport_sufficient_condition(const TUGame& psi);

/// A player whose singleton cost is maximal at every profile, smallest index
/// first.
std::optional<Player> most_costly_player(const GameWithStrategies& gws);

/// Every table game is simple.
bool is_simple_family(const GameWithStrategies& gws);

struct SimpleCoreCharacterization {
    bool nonempty = false;
    std::optional<Player> player;
};

/// Searches for a player i who, against every profile of the others, has a
/// strategy making worth(N \ {i}) = 0. Such a player exists iff the maxmin
/// transform has a nonempty core. Requires a simple family.
SimpleCoreCharacterization simple_core_characterization(const GameWithStrategies& gws);

}  // namespace tugs

#endif  // TUGS_CLASSES_HPP
