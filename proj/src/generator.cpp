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

#include "tugs/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace tugs {

std::string_view to_string(InstanceClass c) {
    switch (c) {
        case InstanceClass::general: return "general";
        case InstanceClass::superadditive: return "superadditive";
        case InstanceClass::monotone: return "monotone";
        case InstanceClass::simple: return "simple";
        case InstanceClass::airport: return "airport";
    }
    return "?";
}

InstanceClass parse_instance_class(std::string_view name) {
    for (auto c : {InstanceClass::general, InstanceClass::superadditive, InstanceClass::monotone,
                   InstanceClass::simple, InstanceClass::airport})
        if (to_string(c) == name) return c;
    throw std::invalid_argument("unknown instance class '" + std::string(name) + "'");
}

namespace {

// std distributions are implementation-defined; plain modulo keeps the
// generated instances identical across standard libraries.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    long between(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }

    // Integers and occasional halves in [lo, hi].
    Rational worth(long lo, long hi) {
        const long twice = between(2 * lo, 2 * hi);
        return between(0, 3) == 0 ? Rational(twice) / 2 : Rational(twice / 2);
    }

private:
    std::mt19937_64 engine_;
};

std::vector<Rational> general_game(Draw& draw, std::size_t n) {
    std::vector<Rational> w(coalition_count(n));
    for (std::size_t s = 1; s < w.size(); ++s) w[s] = draw.worth(-3, 10);
    return w;
}

std::vector<Rational> superadditive_game(Draw& draw, std::size_t n) {
    std::vector<Rational> w(coalition_count(n));
    for (std::uint32_t bits = 1; bits < w.size(); ++bits) {
        const Coalition s{bits};
        Rational floor = draw.worth(-2, 4);
        if (s.size() > 1) {
            bool first = true;
            for_each_subset(s, [&](Coalition a) {
                if (a.is_empty() || a == s) return;
                const Rational split = w[a.index()] + w[(s & a.complement(n)).index()];
                if (first || split > floor) floor = split;
                first = false;
            });
            floor += draw.worth(0, 3);
        }
        w[bits] = floor;
    }
    return w;
}

std::vector<Rational> monotone_game(Draw& draw, std::size_t n) {
    std::vector<Rational> w(coalition_count(n));
    for (std::uint32_t bits = 1; bits < w.size(); ++bits) {
        const Coalition s{bits};
        Rational top = 0;
        for (Player i = 0; i < n; ++i)
            if (s.contains(i)) top = std::max(top, w[s.without(i).index()]);
        w[bits] = top + draw.worth(0, 3);
    }
    return w;
}

std::vector<Rational> simple_game(Draw& draw, std::size_t n) {
    std::vector<Rational> w(coalition_count(n));
    const Coalition grand = Coalition::grand(n);
    for (std::uint32_t bits = 1; bits < w.size(); ++bits) {
        const Coalition s{bits};
        bool winning = s == grand || draw.between(0, 2) == 0;
        for (Player i = 0; i < n && !winning; ++i)
            if (s.contains(i) && w[s.without(i).index()] == 1) winning = true;
        w[bits] = winning ? 1 : 0;
    }
    return w;
}

std::vector<Rational> airport_game(Draw& draw, std::size_t n) {
    std::vector<Rational> d(n);
    for (auto& x : d) x = draw.worth(0, 10);
    const TUGame g = airport_from_costs(d);
    return {g.worths().begin(), g.worths().end()};
}

}  // namespace

Instance generate_instance(std::uint64_t seed, std::size_t n, std::size_t max_strategies, InstanceClass cls) {
    if (n == 0 || n > kMaxGeneratedPlayers)
        throw std::invalid_argument("generated instances need 1 to 4 players, got " + std::to_string(n));
    if (max_strategies == 0 || max_strategies > kMaxGeneratedStrategies)
        throw std::invalid_argument("generated instances need 1 to 3 strategies per player, got " +
                                    std::to_string(max_strategies));

    Draw draw(seed);
    std::vector<std::string> players;
    std::vector<std::vector<std::string>> strategies;
    std::vector<std::size_t> counts;
    std::size_t profiles = 1;
    for (std::size_t i = 0; i < n; ++i) {
        players.push_back(std::to_string(i + 1));
        counts.push_back(static_cast<std::size_t>(draw.between(1, static_cast<long>(max_strategies))));
        profiles *= counts.back();
        std::vector<std::string> names;
        for (std::size_t s = 0; s < counts.back(); ++s) names.push_back(std::string(1, static_cast<char>('A' + s)));
        strategies.push_back(std::move(names));
    }

    const Orientation orientation = cls == InstanceClass::airport ? Orientation::cost : Orientation::value;
    std::vector<TUGame> table;
    for (std::size_t p = 0; p < profiles; ++p) {
        std::vector<Rational> worths;
        switch (cls) {
            case InstanceClass::general: worths = general_game(draw, n); break;
            case InstanceClass::superadditive: worths = superadditive_game(draw, n); break;
            case InstanceClass::monotone: worths = monotone_game(draw, n); break;
            case InstanceClass::simple: worths = simple_game(draw, n); break;
            case InstanceClass::airport: worths = airport_game(draw, n); break;
        }
        table.emplace_back(n, orientation, std::move(worths));
    }
    return {std::move(players), std::move(strategies), GameWithStrategies(std::move(counts), orientation, std::move(table)),
            false};
}

std::vector<Allocation> sample_allocations(const GameWithStrategies& gws, std::size_t count, std::uint64_t seed) {
    const std::size_t n = gws.players();
    const auto size = static_cast<Eigen::Index>(n);
    const TUGame psi = guarantee_transform(gws).game;
    const Rational& total = psi(psi.grand());

    std::vector<Allocation> pool;
    if (n <= kMaxVertexPlayers) {
        pool = core_vertices(psi);
        for (const auto& g : guarantee_games(gws))
            for (auto& v : core_vertices(g)) pool.push_back(std::move(v));
        const std::size_t corners = pool.size();
        for (std::size_t a = 0; a < corners; ++a)
            for (std::size_t b = a + 1; b < corners && pool.size() < 4 * count; ++b)
                pool.push_back((pool[a] + pool[b]) / Rational(2));
    }

    Draw draw(seed);
    std::vector<Allocation> out;
    out.reserve(count);
    while (out.size() < count) {
        Allocation a(size);
        const long mode = draw.between(0, 3);
        if (!pool.empty() && mode <= 1) {
            a = pool[static_cast<std::size_t>(draw.between(0, static_cast<long>(pool.size()) - 1))];
            if (mode == 1 && n > 1) {
                // Move a small amount between two players; efficiency is kept.
                const auto i = static_cast<Eigen::Index>(draw.between(0, size - 1));
                const auto j = static_cast<Eigen::Index>((i + draw.between(1, size - 1)) % size);
                const Rational delta = draw.worth(-2, 2) / 2;
                a(i) += delta;
                a(j) -= delta;
            }
        } else {
            Rational assigned = 0;
            for (Eigen::Index i = 0; i + 1 < size; ++i) {
                a(i) = total / size + draw.worth(-4, 4);
                assigned += a(i);
            }
            a(size - 1) = total - assigned;
        }
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace tugs
