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

#include "tugs/procedures.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace tugs {

std::string_view to_string(Procedure p) {
    switch (p) {
        case Procedure::maxmin: return "maxmin";
        case Procedure::minmax: return "minmax";
        case Procedure::maxmax: return "maxmax";
    }
    return "?";
}

Procedure parse_procedure(std::string_view name) {
    if (name == "maxmin") return Procedure::maxmin;
    if (name == "minmax") return Procedure::minmax;
    if (name == "maxmax") return Procedure::maxmax;
    throw std::invalid_argument("unknown procedure '" + std::string(name) + "'");
}

namespace {

std::string label(Coalition s) {
    std::string out = "{";
    for (Player i = 0; i < kMaxPlayers; ++i) {
        if (!s.contains(i)) continue;
        if (out.size() > 1) out += ",";
        out += std::to_string(i + 1);
    }
    return out + "}";
}

struct Optimum {
    Rational worth;
    StrategyProfile witness;
};

// Outer optimization over the coalition's own strategies, inner over the
// outsiders', with `outer` the orientation whose notion of "better" the
// coalition pursues. The outsiders pursue the opposite.
Optimum guarantee_at(const GameWithStrategies& gws, Coalition s, Orientation outer) {
    const std::size_t n = gws.players();
    std::size_t own_profiles = 1;
    for (Player i = 0; i < n; ++i)
        if (s.contains(i)) own_profiles *= gws.strategy_count(i);

    std::vector<std::optional<Rational>> inner(own_profiles);
    std::vector<std::size_t> inner_at(own_profiles);
    std::vector<std::size_t> choice(n, 0);
    for (std::size_t p = 0; p < gws.profile_count(); ++p) {
        std::size_t key = 0;
        for (Player i = 0; i < n; ++i)
            if (s.contains(i)) key = key * gws.strategy_count(i) + choice[i];
        const Rational& w = gws.game_at_index(p)(s);
        // Strict comparisons keep the first, i.e. lexicographically smallest, optimum.
        if (!inner[key] || better(outer, *inner[key], w)) {
            inner[key] = w;
            inner_at[key] = p;
        }
        for (std::size_t k = n; k-- > 0;) {
            if (++choice[k] < gws.strategy_count(k)) break;
            choice[k] = 0;
        }
    }

    std::size_t best = 0;
    for (std::size_t key = 1; key < own_profiles; ++key)
        if (better(outer, *inner[key], *inner[best])) best = key;
    return {*inner[best], gws.profile_at(inner_at[best])};
}

TransformResult guarantee_all(const GameWithStrategies& gws, Orientation outer) {
    const std::size_t n = gws.players();
    std::vector<Rational> worths(coalition_count(n));
    std::vector<StrategyProfile> witness(coalition_count(n));
    for (std::uint32_t bits = 0; bits < worths.size(); ++bits) {
        auto opt = guarantee_at(gws, Coalition{bits}, outer);
        worths[bits] = std::move(opt.worth);
        witness[bits] = std::move(opt.witness);
    }
    return {TUGame(n, gws.orientation(), std::move(worths)), std::move(witness)};
}

}  // namespace

TransformResult maxmin(const GameWithStrategies& gws) {
    if (gws.orientation() != Orientation::value)
        throw std::invalid_argument("maxmin needs a value family; use minmax for costs");
    return guarantee_all(gws, Orientation::value);
}

TransformResult minmax(const GameWithStrategies& gws) {
    if (gws.orientation() != Orientation::cost)
        throw std::invalid_argument("minmax needs a cost family; use maxmin for values");
    return guarantee_all(gws, Orientation::cost);
}

TransformResult maxmax(const GameWithStrategies& gws) {
    const std::size_t n = gws.players();
    const Orientation o = gws.orientation();
    std::vector<Rational> worths(coalition_count(n));
    std::vector<StrategyProfile> witness(coalition_count(n));
    for (std::uint32_t bits = 0; bits < worths.size(); ++bits) {
        std::size_t best = 0;
        for (std::size_t p = 1; p < gws.profile_count(); ++p)
            if (better(o, gws.game_at_index(p)(Coalition{bits}), gws.game_at_index(best)(Coalition{bits}))) best = p;
        worths[bits] = gws.game_at_index(best)(Coalition{bits});
        witness[bits] = gws.profile_at(best);
    }
    return {TUGame(n, o, std::move(worths)), std::move(witness)};
}

TransformResult guarantee_transform(const GameWithStrategies& gws) {
    return guarantee_all(gws, gws.orientation());
}

TransformResult transform(const GameWithStrategies& gws, Procedure p) {
    switch (p) {
        case Procedure::maxmin: return maxmin(gws);
        case Procedure::minmax: return minmax(gws);
        case Procedure::maxmax: return maxmax(gws);
    }
    throw std::invalid_argument("unknown procedure");
}

Rational guarantee_worth(const GameWithStrategies& gws, Coalition s) {
    if (!s.is_subset_of(Coalition::grand(gws.players()))) throw std::out_of_range("coalition outside the player set");
    return guarantee_at(gws, s, gws.orientation()).worth;
}

namespace {

void fail(Verdict& v, std::string why) {
    if (v.holds) v.failure = std::move(why);
    v.holds = false;
}

}  // namespace

Verdict check_individual_objectivity(const GameWithStrategies& gws) {
    Verdict v;
    for (Player i = 0; i < gws.players(); ++i) {
        const Coalition s = Coalition::singleton(i);
        const Rational& first = gws.game_at_index(0)(s);
        bool constant = true;
        for (const auto& g : gws.table())
            if (g(s) != first) constant = false;
        if (!constant) continue;
        v.applicable = true;
        ++v.cases;
        const Rational got = guarantee_worth(gws, s);
        if (got != first)
            fail(v, "player " + std::to_string(i + 1) + " has constant worth " + to_string(first) +
                        " but the transform gives " + to_string(got));
    }
    return v;
}

Verdict check_monotonicity_axiom(const GameWithStrategies& hi, const GameWithStrategies& lo) {
    if (hi.players() != lo.players() || hi.orientation() != lo.orientation() ||
        !std::equal(hi.strategy_counts().begin(), hi.strategy_counts().end(), lo.strategy_counts().begin()))
        throw std::invalid_argument("monotonicity check needs two families of the same shape");
    for (std::size_t p = 0; p < hi.profile_count(); ++p) {
        const auto a = hi.game_at_index(p).worths();
        const auto b = lo.game_at_index(p).worths();
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] < b[k]) throw std::invalid_argument("monotonicity check needs hi >= lo at every profile");
    }

    Verdict v;
    v.applicable = true;
    const TUGame up = guarantee_transform(hi).game;
    const TUGame down = guarantee_transform(lo).game;
    for (std::uint32_t bits = 0; bits < coalition_count(hi.players()); ++bits) {
        ++v.cases;
        const Coalition s{bits};
        if (up(s) < down(s))
            fail(v, "transform of the larger family is smaller at " + label(s) + ": " + to_string(up(s)) + " < " +
                        to_string(down(s)));
    }
    return v;
}

Verdict check_irrelevance_dominated_strategies(const GameWithStrategies& gws) {
    Verdict v;
    const Coalition grand = Coalition::grand(gws.players());
    for (Player i = 0; i < gws.players(); ++i) {
        if (gws.strategy_count(i) < 2) continue;
        for (std::size_t s = 0; s < gws.strategy_count(i); ++s) {
            std::optional<GameWithStrategies> reduced;
            for (std::uint32_t bits = 1; bits <= grand.bits(); ++bits) {
                const Coalition c{bits};
                if (!c.contains(i) || !is_weakly_dominated(gws, i, s, c)) continue;
                if (!reduced) reduced = delete_strategy(gws, i, s);
                v.applicable = true;
                ++v.cases;
                const Rational before = guarantee_worth(gws, c);
                const Rational after = guarantee_worth(*reduced, c);
                if (before != after)
                    fail(v, "deleting dominated strategy " + std::to_string(s) + " of player " + std::to_string(i + 1) +
                                " changes " + label(c) + " from " + to_string(before) + " to " + to_string(after));
            }
        }
    }
    return v;
}

Verdict check_irrelevance_dominated_threats(const GameWithStrategies& gws) {
    Verdict v;
    const Coalition grand = Coalition::grand(gws.players());
    for (Player j = 0; j < gws.players(); ++j) {
        if (gws.strategy_count(j) < 2) continue;
        for (std::size_t s = 0; s < gws.strategy_count(j); ++s) {
            std::optional<GameWithStrategies> reduced;
            for (std::uint32_t bits = 1; bits <= grand.bits(); ++bits) {
                const Coalition c{bits};
                if (c.contains(j) || !is_weakly_dominated_threat(gws, j, s, c)) continue;
                if (!reduced) reduced = delete_strategy(gws, j, s);
                v.applicable = true;
                ++v.cases;
                const Rational before = guarantee_worth(gws, c);
                const Rational after = guarantee_worth(*reduced, c);
                if (before != after)
                    fail(v, "deleting dominated threat " + std::to_string(s) + " of player " + std::to_string(j + 1) +
                                " changes " + label(c) + " from " + to_string(before) + " to " + to_string(after));
            }
        }
    }
    return v;
}

Verdict check_merge_invariance(const GameWithStrategies& gws, Coalition s) {
    const MergedGame merged = merge_coalition(gws, s);
    const TUGame original = guarantee_transform(gws).game;
    const TUGame together = guarantee_transform(merged.game).game;

    Verdict v;
    v.applicable = true;
    for_each_subset(s.complement(gws.players()), [&](Coalition t) {
        for (const Coalition c : {t, t | s}) {
            ++v.cases;
            const Rational& a = original(c);
            const Rational& b = together(merged.map.to_merged(c));
            if (a != b)
                fail(v, "merging " + label(s) + " changes " + label(c) + " from " + to_string(a) + " to " +
                            to_string(b));
        }
    });
    return v;
}

namespace {

// Value-oriented view: cost games are negated so that superadditivity of the
// view is subadditivity of the costs.
TUGame as_value(const TUGame& g) { return g.orientation() == Orientation::value ? g : negate(g); }

template <class Predicate>
Verdict check_transmission(const GameWithStrategies& gws, Predicate holds, const char* property) {
    Verdict v;
    for (const auto& g : gws.table())
        if (!holds(as_value(g))) return v;
    v.applicable = true;
    v.cases = 1;
    if (!holds(as_value(guarantee_transform(gws).game)))
        fail(v, std::string("every table game is ") + property + " but the transform is not");
    return v;
}

}  // namespace

Verdict check_superadditivity_transmission(const GameWithStrategies& gws) {
    return check_transmission(gws, [](const TUGame& g) { return is_superadditive(g); }, "superadditive");
}

Verdict check_monotonicity_transmission(const GameWithStrategies& gws) {
    // Monotonicity is read on the stored worths for either orientation.
    Verdict v;
    for (const auto& g : gws.table())
        if (!is_monotone(g)) return v;
    v.applicable = true;
    v.cases = 1;
    if (!is_monotone(guarantee_transform(gws).game)) fail(v, "every table game is monotone but the transform is not");
    return v;
}

std::vector<TUGame> guarantee_games(const GameWithStrategies& gws) {
    const Rational psi_n = guarantee_worth(gws, Coalition::grand(gws.players()));
    std::vector<TUGame> out;
    out.reserve(gws.profile_count());
    for (std::size_t p = 0; p < gws.profile_count(); ++p) out.push_back(guarantee_game(gws, gws.profile_at(p), psi_n));
    return out;
}

Verdict check_core_intersection(const GameWithStrategies& gws, const std::vector<Allocation>& samples) {
    const TUGame psi = guarantee_transform(gws).game;
    const std::vector<TUGame> games = guarantee_games(gws);
    const Orientation o = gws.orientation();
    const Coalition grand = psi.grand();

    Verdict v;
    v.applicable = true;
    for (std::uint32_t bits = 1; bits < grand.bits(); ++bits) {
        const Coalition s{bits};
        ++v.cases;
        const Rational* best = &games.front()(s);
        for (const auto& g : games)
            if (better(o, g(s), *best)) best = &g(s);
        if (*best != psi(s))
            fail(v, "constraint identity fails at " + label(s) + ": transform " + to_string(psi(s)) +
                        ", best guarantee " + to_string(*best));
    }
    for (const auto& a : samples) {
        ++v.cases;
        const bool lhs = core_membership(psi, a);
        bool rhs = true;
        for (const auto& g : games) rhs = rhs && core_membership(g, a);
        if (lhs != rhs) {
            std::string point;
            for (Eigen::Index i = 0; i < a.size(); ++i) point += (i ? "," : "") + to_string(a(i));
            fail(v, "membership differs at (" + point + ")");
        }
    }
    return v;
}

}  // namespace tugs
