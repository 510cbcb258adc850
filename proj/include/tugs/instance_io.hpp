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

#ifndef TUGS_INSTANCE_IO_HPP
#define TUGS_INSTANCE_IO_HPP

#include "tugs/strategic.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tugs {

/// Malformed or inconsistent instance document.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A family of games together with the names used in its document.
///
/// Document schema (JSON):
///
///     { "orientation": "value" | "cost",
///       "players":     ["1", "2", "3"],
///       "strategies":  [["NL", "L"], ["NL", "L"], ["NR", "R"]],
///       "games": { "L,L,NR": { "1+2": "5/2", "1+2+3": "2.25", ... }, ... } }
///
/// Profile keys join one strategy name per player with ","; coalition keys
/// join player names with "+". Worths are integers, "p/q" or finite
/// decimals, read exactly; absent coalitions are worth 0. A single TU-game
/// may be given instead of "strategies"/"games" as "game": { coalition:
/// worth }, which loads as a family with one profile.
struct Instance {
    std::vector<std::string> players;
    std::vector<std::vector<std::string>> strategies;
    GameWithStrategies family;
    bool single_game = false;
};

Instance parse_instance(std::string_view json_text);
Instance load_instance(const std::filesystem::path& path);

/// Canonical document text: games in table order, coalitions by ascending
/// bitmask, worths as lowest-terms strings.
std::string dump_instance(const Instance& instance);
void save_instance(const std::filesystem::path& path, const Instance& instance);

/// "1+3" style key for a coalition; "∅" for the empty one.
std::string coalition_key(Coalition s, const std::vector<std::string>& players);
/// "L,L,NR" style key for a profile.
std::string profile_key(const StrategyProfile& x, const std::vector<std::vector<std::string>>& strategies);

}  // namespace tugs

#endif  // TUGS_INSTANCE_IO_HPP
