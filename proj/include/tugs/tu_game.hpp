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

#ifndef TUGS_TU_GAME_HPP
#define TUGS_TU_GAME_HPP

#include "tugs/coalition.hpp"
#include "tugs/linalg.hpp"
#include "tugs/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace tugs {

/// Whether worths are benefits to be shared (value) or costs to be covered.
enum class Orientation { value, cost };

std::string_view to_string(Orientation o);
Orientation flip(Orientation o);

/// One payoff (or cost share) per player.
using Allocation = linalg::Vector<Rational>;

/// A transferable-utility game on players 0..n-1: one exact worth per
/// coalition, worth(empty) = 0.
class TUGame {
public:
    /// `worths` is indexed by coalition bitmask and must have exactly 2^n
    /// entries with worths[0] == 0.
    TUGame(std::size_t n, Orientation orientation, std::vector<Rational> worths);

    std::size_t players() const { return n_; }
    Orientation orientation() const { return orientation_; }
    Coalition grand() const { return Coalition::grand(n_); }

    const Rational& worth(Coalition s) const;
    const Rational& operator()(Coalition s) const { return worth(s); }
    std::span<const Rational> worths() const { return worths_; }

    friend bool operator==(const TUGame&, const TUGame&) = default;

private:
    std::size_t n_;
    Orientation orientation_;
    std::vector<Rational> worths_;
};

/// Builds a game from sparse entries; unspecified coalitions are worth 0.
/// Rejects n outside [1, 16], keys outside the player set and a nonzero
/// entry for the empty coalition.
TUGame make_game(std::size_t n, Orientation orientation, const std::map<Coalition, Rational>& entries);

/// Sum of a's components over the members of s.
Rational coalition_sum(const Allocation& a, Coalition s);

/// Shapley value computed on the stored worths, whatever the orientation.
Allocation shapley(const TUGame& g);

/// v(S u T) >= v(S) + v(T) for disjoint S, T. Value orientation only.
bool is_superadditive(const TUGame& g);
/// v(S) <= v(T) whenever S is a subset of T.
bool is_monotone(const TUGame& g);
/// Marginal contributions grow with the coalition joined. Value orientation
/// only; test a cost game's concavity as is_convex(negate(c)).
bool is_convex(const TUGame& g);
/// 0/1 worths, worth(N) = 1, monotone.
bool is_simple(const TUGame& g);
/// worth(N \ {i}) == 0.
bool is_veto(const TUGame& g, Player i);

/// Efficiency plus coalitional rationality; for cost games the coalition
/// inequalities read sum_S a <= c(S).
bool core_membership(const TUGame& g, const Allocation& a);

struct CoreCheck {
    bool nonempty = false;
    std::optional<Allocation> witness;  ///< a core allocation when nonempty
};

/// Balancedness decided by an exact linear program.
CoreCheck core_nonempty(const TUGame& g);

/// Largest player count accepted by core_vertices.
inline constexpr std::size_t kMaxVertexPlayers = 5;

/// Exact vertex set of the core, sorted lexicographically; empty when the
/// core is empty.
std::vector<Allocation> core_vertices(const TUGame& g);

/// Negates every worth and flips the orientation.
TUGame negate(const TUGame& g);

/// Cost game worth(S) = max_{i in S} d_i with one movement per player.
TUGame airport_from_costs(std::span<const Rational> runway_costs);

}  // namespace tugs

#endif  // TUGS_TU_GAME_HPP
