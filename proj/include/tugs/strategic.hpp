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

#ifndef TUGS_STRATEGIC_HPP
#define TUGS_STRATEGIC_HPP

#include "tugs/tu_game.hpp"

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace tugs {

/// One strategy index per player.
struct StrategyProfile {
    std::vector<std::size_t> choices;

    std::size_t operator[](Player i) const { return choices[i]; }
    std::size_t& operator[](Player i) { return choices[i]; }
    friend auto operator<=>(const StrategyProfile&, const StrategyProfile&) = default;
    friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

/// Default bound on profile_count * 2^n; GWS_SIZE_GUARD overrides it.
inline constexpr std::size_t kDefaultSizeGuard = std::size_t{1} << 20;

/// The active table-size guard: GWS_SIZE_GUARD when set, else the default.
std::size_t size_guard();

/// A TU-game attached to every strategy profile. Profiles are stored densely
/// in lexicographic order (player 0 most significant, strategy indices
/// ascending), so a profile's table index is its mixed-radix value.
class GameWithStrategies {
public:
    GameWithStrategies(std::vector<std::size_t> strategy_counts, Orientation orientation,
                       std::vector<TUGame> table);

    std::size_t players() const { return counts_.size(); }
    Orientation orientation() const { return orientation_; }
    std::span<const std::size_t> strategy_counts() const { return counts_; }
    std::size_t strategy_count(Player i) const { return counts_.at(i); }
    std::size_t profile_count() const { return table_.size(); }
    std::span<const TUGame> table() const { return table_; }

    /// Distance between consecutive strategies of player i in the table.
    std::size_t stride(Player i) const { return strides_.at(i); }

    std::size_t index_of(const StrategyProfile& x) const;
    StrategyProfile profile_at(std::size_t index) const;
    const TUGame& game_at_index(std::size_t index) const { return table_.at(index); }

    friend bool operator==(const GameWithStrategies&, const GameWithStrategies&) = default;

private:
    std::vector<std::size_t> counts_;
    std::vector<std::size_t> strides_;
    Orientation orientation_;
    std::vector<TUGame> table_;
};

/// The game attached to profile x; throws std::out_of_range on a bad index.
const TUGame& game_at(const GameWithStrategies& gws, const StrategyProfile& x);

/// Removes strategy s of player i; later strategies shift down by one.
GameWithStrategies delete_strategy(const GameWithStrategies& gws, Player i, std::size_t s);

struct DominanceResult {
    bool holds = false;
    /// The alternative that works against every opponent profile, if one does.
    std::optional<std::size_t> witness;

    explicit operator bool() const { return holds; }
};

/// Whether some other strategy of i does at least as well for S as s against
/// every opponent profile (at most as costly for cost families). Requires i in S.
DominanceResult is_weakly_dominated(const GameWithStrategies& gws, Player i, std::size_t s, Coalition coalition);

/// Whether, against every profile of the others, some alternative of outsider
/// j harms S at least as much as s does. Requires j outside a nonempty S.
DominanceResult is_weakly_dominated_threat(const GameWithStrategies& gws, Player j, std::size_t s,
                                           Coalition coalition);

/// Index bijection between a player set and the same set with coalition S
/// acting as one player [S]. The merged player has index 0 and the rest keep
/// their relative order. A strategy of [S] is the mixed-radix code of the
/// members' strategies, lowest member most significant.
class MergeMap {
public:
    MergeMap(Coalition merged, std::span<const std::size_t> strategy_counts);

    Coalition merged() const { return merged_; }
    std::span<const Player> members() const { return members_; }
    std::span<const Player> others() const { return others_; }
    /// Strategy counts of the merged player set.
    std::vector<std::size_t> merged_counts() const;

    /// Strategies of the members of S encoded by one strategy of [S].
    std::vector<std::size_t> member_strategies(std::size_t merged_strategy) const;
    StrategyProfile original_profile(const StrategyProfile& merged_profile) const;
    /// T or T u S (T outside S) in original indices to the merged player set.
    Coalition to_merged(Coalition original) const;
    Coalition to_original(Coalition merged_coalition) const;

private:
    Coalition merged_;
    std::vector<Player> members_;
    std::vector<Player> others_;
    std::vector<std::size_t> member_counts_;
    std::vector<std::size_t> other_counts_;
};

struct MergedGame {
    GameWithStrategies game;
    MergeMap map;
};

MergedGame merge_coalition(const GameWithStrategies& gws, Coalition coalition);

/// The guarantee game of profile x: worth(S) is the worst outcome for S over
/// outsider deviations from x, and the grand coalition gets psi_n.
TUGame guarantee_game(const GameWithStrategies& gws, const StrategyProfile& x, const Rational& psi_n);

/// True when `candidate` is a better outcome than `incumbent` for the
/// family's orientation (larger value, smaller cost).
bool better(Orientation o, const Rational& candidate, const Rational& incumbent);

}  // namespace tugs

#endif  // TUGS_STRATEGIC_HPP
