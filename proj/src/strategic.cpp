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

#include "tugs/strategic.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace tugs {

std::size_t size_guard() {
    const char* env = std::getenv("GWS_SIZE_GUARD");
    if (env == nullptr || *env == '\0') return kDefaultSizeGuard;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw std::invalid_argument(std::string("GWS_SIZE_GUARD is not a positive integer: ") + env);
    return static_cast<std::size_t>(v);
}

bool better(Orientation o, const Rational& candidate, const Rational& incumbent) {
    return o == Orientation::value ? candidate > incumbent : candidate < incumbent;
}

GameWithStrategies::GameWithStrategies(std::vector<std::size_t> strategy_counts, Orientation orientation,
                                       std::vector<TUGame> table)
    : counts_(std::move(strategy_counts)), orientation_(orientation), table_(std::move(table)) {
    const std::size_t n = counts_.size();
    if (n == 0 || n > kMaxPlayers)
        throw std::invalid_argument("player count must be in [1, 16], got " + std::to_string(n));

    const std::size_t guard = size_guard();
    std::size_t profiles = 1;
    for (std::size_t c : counts_) {
        if (c == 0) throw std::invalid_argument("every player needs at least one strategy");
        if (profiles > guard / c) throw std::length_error("size guard exceeded: too many strategy profiles");
        profiles *= c;
    }
    if (profiles > guard / coalition_count(n))
        throw std::length_error("size guard exceeded: " + std::to_string(profiles) + " profiles x 2^" +
                                std::to_string(n) + " coalitions > " + std::to_string(guard));

    if (table_.size() != profiles)
        throw std::invalid_argument("table has " + std::to_string(table_.size()) + " games for " +
                                    std::to_string(profiles) + " profiles");
    for (const auto& g : table_) {
        if (g.players() != n) throw std::invalid_argument("table game has the wrong player count");
        if (g.orientation() != orientation_) throw std::invalid_argument("table game has the wrong orientation");
    }

    strides_.assign(n, 1);
    for (std::size_t i = n - 1; i > 0; --i) strides_[i - 1] = strides_[i] * counts_[i];
}

std::size_t GameWithStrategies::index_of(const StrategyProfile& x) const {
    if (x.choices.size() != counts_.size()) throw std::out_of_range("profile length differs from the player count");
    std::size_t index = 0;
    for (Player i = 0; i < counts_.size(); ++i) {
        if (x[i] >= counts_[i])
            throw std::out_of_range("strategy " + std::to_string(x[i]) + " out of range for player " +
                                    std::to_string(i));
        index += x[i] * strides_[i];
    }
    return index;
}

StrategyProfile GameWithStrategies::profile_at(std::size_t index) const {
    if (index >= table_.size()) throw std::out_of_range("profile index out of range");
    StrategyProfile x{std::vector<std::size_t>(counts_.size())};
    for (Player i = 0; i < counts_.size(); ++i) {
        x[i] = index / strides_[i];
        index %= strides_[i];
    }
    return x;
}

const TUGame& game_at(const GameWithStrategies& gws, const StrategyProfile& x) {
    return gws.game_at_index(gws.index_of(x));
}

GameWithStrategies delete_strategy(const GameWithStrategies& gws, Player i, std::size_t s) {
    if (i >= gws.players()) throw std::out_of_range("player out of range");
    if (s >= gws.strategy_count(i)) throw std::out_of_range("strategy out of range");
    if (gws.strategy_count(i) < 2) throw std::invalid_argument("cannot delete the only strategy of a player");

    std::vector<std::size_t> counts(gws.strategy_counts().begin(), gws.strategy_counts().end());
    --counts[i];
    std::vector<TUGame> table;
    table.reserve(gws.profile_count() / gws.strategy_count(i) * counts[i]);
    for (std::size_t p = 0; p < gws.profile_count(); ++p)
        if ((p / gws.stride(i)) % gws.strategy_count(i) != s) table.push_back(gws.game_at_index(p));
    return GameWithStrategies(std::move(counts), gws.orientation(), std::move(table));
}

namespace {

void check_strategy(const GameWithStrategies& gws, Player i, std::size_t s, Coalition coalition) {
    if (i >= gws.players()) throw std::out_of_range("player out of range");
    if (s >= gws.strategy_count(i)) throw std::out_of_range("strategy out of range");
    if (!coalition.is_subset_of(Coalition::grand(gws.players())))
        throw std::out_of_range("coalition outside the player set");
}

// Table index of p with player i switched from its strategy s to t.
std::size_t switched(const GameWithStrategies& gws, std::size_t p, Player i, std::size_t s, std::size_t t) {
    return p - s * gws.stride(i) + t * gws.stride(i);
}

bool plays(const GameWithStrategies& gws, std::size_t p, Player i, std::size_t s) {
    return (p / gws.stride(i)) % gws.strategy_count(i) == s;
}

}  // namespace

DominanceResult is_weakly_dominated(const GameWithStrategies& gws, Player i, std::size_t s, Coalition coalition) {
    check_strategy(gws, i, s, coalition);
    if (!coalition.contains(i)) throw std::invalid_argument("is_weakly_dominated requires the player in the coalition");

    const Orientation o = gws.orientation();
    for (std::size_t t = 0; t < gws.strategy_count(i); ++t) {
        if (t == s) continue;
        bool all = true;
        for (std::size_t p = 0; all && p < gws.profile_count(); ++p) {
            if (!plays(gws, p, i, s)) continue;
            const Rational& mine = gws.game_at_index(p)(coalition);
            const Rational& alt = gws.game_at_index(switched(gws, p, i, s, t))(coalition);
            if (better(o, mine, alt)) all = false;
        }
        if (all) return {true, t};
    }
    return {};
}

DominanceResult is_weakly_dominated_threat(const GameWithStrategies& gws, Player j, std::size_t s,
                                           Coalition coalition) {
    check_strategy(gws, j, s, coalition);
    if (coalition.is_empty() || coalition.contains(j))
        throw std::invalid_argument("is_weakly_dominated_threat requires a nonempty coalition without the player");

    const Orientation o = gws.orientation();
    const std::size_t k = gws.strategy_count(j);
    if (k < 2) return {};

    // uniform[t]: alternative t harms S at least as much at every profile so far.
    std::vector<bool> uniform(k, true);
    uniform[s] = false;
    for (std::size_t p = 0; p < gws.profile_count(); ++p) {
        if (!plays(gws, p, j, s)) continue;
        const Rational& current = gws.game_at_index(p)(coalition);
        bool some = false;
        for (std::size_t t = 0; t < k; ++t) {
            if (t == s) continue;
            // "At least as harmful": not better for S than the current outcome.
            const bool harms = !better(o, gws.game_at_index(switched(gws, p, j, s, t))(coalition), current);
            some = some || harms;
            if (!harms) uniform[t] = false;
        }
        if (!some) return {};
    }
    DominanceResult out{true, std::nullopt};
    for (std::size_t t = 0; t < k; ++t)
        if (uniform[t]) {
            out.witness = t;
            break;
        }
    return out;
}

MergeMap::MergeMap(Coalition merged, std::span<const std::size_t> strategy_counts) : merged_(merged) {
    const std::size_t n = strategy_counts.size();
    if (merged.is_empty()) throw std::invalid_argument("cannot merge the empty coalition");
    if (!merged.is_subset_of(Coalition::grand(n))) throw std::out_of_range("coalition outside the player set");
    for (Player i = 0; i < n; ++i) {
        if (merged.contains(i)) {
            members_.push_back(i);
            member_counts_.push_back(strategy_counts[i]);
        } else {
            others_.push_back(i);
            other_counts_.push_back(strategy_counts[i]);
        }
    }
}

std::vector<std::size_t> MergeMap::merged_counts() const {
    std::vector<std::size_t> counts{1};
    for (std::size_t c : member_counts_) counts[0] *= c;
    counts.insert(counts.end(), other_counts_.begin(), other_counts_.end());
    return counts;
}

std::vector<std::size_t> MergeMap::member_strategies(std::size_t merged_strategy) const {
    std::vector<std::size_t> out(members_.size());
    for (std::size_t k = members_.size(); k-- > 0;) {
        out[k] = merged_strategy % member_counts_[k];
        merged_strategy /= member_counts_[k];
    }
    if (merged_strategy != 0) throw std::out_of_range("merged strategy out of range");
    return out;
}

StrategyProfile MergeMap::original_profile(const StrategyProfile& merged_profile) const {
    if (merged_profile.choices.size() != others_.size() + 1)
        throw std::out_of_range("merged profile length differs from the merged player count");
    StrategyProfile x{std::vector<std::size_t>(members_.size() + others_.size())};
    const auto own = member_strategies(merged_profile[0]);
    for (std::size_t k = 0; k < members_.size(); ++k) x[members_[k]] = own[k];
    for (std::size_t k = 0; k < others_.size(); ++k) x[others_[k]] = merged_profile[k + 1];
    return x;
}

Coalition MergeMap::to_merged(Coalition original) const {
    const Coalition inside = original & merged_;
    if (!inside.is_empty() && inside != merged_)
        throw std::invalid_argument("coalition splits the merged players");
    Coalition out = inside.is_empty() ? Coalition::empty() : Coalition::singleton(0);
    for (std::size_t k = 0; k < others_.size(); ++k)
        if (original.contains(others_[k])) out = out.with(k + 1);
    return out;
}

Coalition MergeMap::to_original(Coalition merged_coalition) const {
    Coalition out = merged_coalition.contains(0) ? merged_ : Coalition::empty();
    for (std::size_t k = 0; k < others_.size(); ++k)
        if (merged_coalition.contains(k + 1)) out = out.with(others_[k]);
    return out;
}

MergedGame merge_coalition(const GameWithStrategies& gws, Coalition coalition) {
    MergeMap map(coalition, gws.strategy_counts());
    std::vector<std::size_t> counts = map.merged_counts();
    const std::size_t merged_n = counts.size();

    std::size_t profiles = 1;
    for (std::size_t c : counts) profiles *= c;
    std::vector<TUGame> table;
    table.reserve(profiles);
    StrategyProfile merged_profile{std::vector<std::size_t>(merged_n, 0)};
    for (std::size_t q = 0; q < profiles; ++q) {
        const TUGame& g = game_at(gws, map.original_profile(merged_profile));
        std::vector<Rational> worths(coalition_count(merged_n));
        for (std::uint32_t bits = 1; bits < worths.size(); ++bits)
            worths[bits] = g(map.to_original(Coalition{bits}));
        table.emplace_back(merged_n, gws.orientation(), std::move(worths));

        for (std::size_t k = merged_n; k-- > 0;) {
            if (++merged_profile[k] < counts[k]) break;
            merged_profile[k] = 0;
        }
    }
    return {GameWithStrategies(std::move(counts), gws.orientation(), std::move(table)), std::move(map)};
}

TUGame guarantee_game(const GameWithStrategies& gws, const StrategyProfile& x, const Rational& psi_n) {
    gws.index_of(x);  // validates x
    const std::size_t n = gws.players();
    const Orientation o = gws.orientation();
    const Coalition grand = Coalition::grand(n);

    std::vector<Rational> worths(coalition_count(n));
    for (std::uint32_t bits = 1; bits < grand.bits(); ++bits) {
        const Coalition s{bits};
        std::optional<Rational> worst;
        for (std::size_t p = 0; p < gws.profile_count(); ++p) {
            bool agrees = true;
            for (Player i = 0; agrees && i < n; ++i)
                if (s.contains(i) && !plays(gws, p, i, x[i])) agrees = false;
            if (!agrees) continue;
            const Rational& w = gws.game_at_index(p)(s);
            if (!worst || better(o, *worst, w)) worst = w;
        }
        worths[bits] = *worst;
    }
    worths[grand.index()] = psi_n;
    return TUGame(n, o, std::move(worths));
}

}  // namespace tugs
