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

#include "tugs/classes.hpp"

#include <stdexcept>

namespace tugs {

bool is_airport_family(const GameWithStrategies& gws) {
    if (gws.orientation() != Orientation::cost) return false;
    const std::size_t n = gws.players();
    for (const auto& g : gws.table()) {
        std::vector<Rational> d(n);
        for (Player i = 0; i < n; ++i) {
            d[i] = g(Coalition::singleton(i));
            if (d[i] < 0) return false;
        }
        if (g != airport_from_costs(d)) return false;
    }
    return true;
}

AirportCondition airport_sufficient_condition(const TUGame& psi) {
    if (psi.orientation() != Orientation::cost) throw std::invalid_argument("airport condition expects a cost game");
    const std::size_t n = psi.players();
    const Coalition grand = psi.grand();
    const Rational& total = psi(grand);

    AirportCondition out;
    for (Player i = 0; i < n && !out.pivot; ++i) {
        bool ok = true;
        for (std::uint32_t bits = 1; ok && bits <= grand.bits(); ++bits) {
            const Coalition s{bits};
            if (s.contains(i) && psi(s) < total) ok = false;
        }
        if (ok) out.pivot = i;
    }
    if (!out.pivot) return out;

    std::vector<Rational> d(n);
    for (Player i = 0; i < n; ++i) {
        std::optional<Rational> lowest;
        for (std::uint32_t bits = 1; bits <= grand.bits(); ++bits) {
            const Coalition s{bits};
            if (s.contains(i) && (!lowest || psi(s) < *lowest)) lowest = psi(s);
        }
        d[i] = *lowest;
    }
    // The minorant needs nonnegative runway costs, which holds for minmax
    // transforms of airport families.
    for (const auto& x : d)
        if (x < 0) return out;
    out.holds = true;
    out.minorant = airport_from_costs(d);
    return out;
}

std::optional<Player> most_costly_player(const GameWithStrategies& gws) {
    const std::size_t n = gws.players();
    for (Player i = 0; i < n; ++i) {
        bool ok = true;
        for (const auto& g : gws.table()) {
            for (Player j = 0; ok && j < n; ++j)
                if (g(Coalition::singleton(j)) > g(Coalition::singleton(i))) ok = false;
            if (!ok) break;
        }
        if (ok) return i;
    }
    return std::nullopt;
}

bool is_simple_family(const GameWithStrategies& gws) {
    for (const auto& g : gws.table())
        if (!is_simple(g)) return false;
    return true;
}

SimpleCoreCharacterization simple_core_characterization(const GameWithStrategies& gws) {
    if (!is_simple_family(gws)) throw std::invalid_argument("simple_core_characterization needs a simple family");
    const std::size_t n = gws.players();
    for (Player i = 0; i < n; ++i) {
        const Coalition rest = Coalition::grand(n).without(i);
        const std::size_t own = gws.strategy_count(i);
        const std::size_t stride = gws.stride(i);
        bool ok = true;
        // Profiles with x_i = 0 enumerate every opponent profile once.
        for (std::size_t p = 0; ok && p < gws.profile_count(); ++p) {
            if ((p / stride) % own != 0) continue;
            bool some = false;
            for (std::size_t t = 0; !some && t < own; ++t)
                if (gws.game_at_index(p + t * stride)(rest) == 0) some = true;
            ok = some;
        }
        if (ok) return {true, i};
    }
    return {};
}

}  // namespace tugs
