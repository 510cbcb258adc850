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

// Shared helpers and independent oracles for the test suites. The oracles
// deliberately avoid the library's algorithms: Shapley by averaging over all
// player orders, maxmin by nested enumeration of own and outsider profiles,
// and core emptiness by Cramer's rule over tight constraint sets.

#ifndef TUGS_TESTS_SUPPORT_HPP
#define TUGS_TESTS_SUPPORT_HPP

#include "tugs/generator.hpp"
#include "tugs/instance_io.hpp"
#include "tugs/procedures.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace tugs::test {

inline Rational Q(const char* text) { return parse_rational(text); }

inline std::string fixture_path(const std::string& name) { return std::string(TUGS_FIXTURE_DIR) + "/" + name; }

inline Instance fixture(const std::string& name) { return load_instance(fixture_path(name)); }

/// Three-player game from worths listed as {1},{2},{3},{1,2},{1,3},{2,3},N.
inline TUGame game3(std::vector<Rational> listed, Orientation o = Orientation::value) {
    const std::uint32_t order[] = {0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
    std::vector<Rational> w(8);
    for (std::size_t k = 0; k < 7; ++k) w[order[k]] = listed[k];
    return TUGame(3, o, std::move(w));
}

inline std::vector<Rational> listed3(const TUGame& g) {
    const std::uint32_t order[] = {0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
    std::vector<Rational> out;
    for (auto bits : order) out.push_back(g(Coalition{bits}));
    return out;
}

inline std::vector<Rational> ints(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

inline Allocation alloc(std::initializer_list<Rational> xs) {
    Allocation a(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs) a(i++) = x;
    return a;
}

inline Allocation alloc(std::initializer_list<long> xs) {
    Allocation a(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (long x : xs) a(i++) = x;
    return a;
}

/// Random game with small integer and half-integer worths.
inline TUGame random_game(std::mt19937_64& rng, std::size_t n, Orientation o = Orientation::value) {
    std::vector<Rational> w(coalition_count(n));
    for (std::size_t s = 1; s < w.size(); ++s) w[s] = Rational(static_cast<long>(rng() % 25) - 8) / (1 + rng() % 2);
    return TUGame(n, o, std::move(w));
}

// Oracle: Shapley value as the average marginal contribution over all n! orders.
inline Allocation shapley_by_orders(const TUGame& g) {
    const std::size_t n = g.players();
    std::vector<Player> order(n);
    std::iota(order.begin(), order.end(), Player{0});
    Allocation total = Allocation::Zero(static_cast<Eigen::Index>(n));
    long orders = 0;
    do {
        Coalition before;
        for (Player i : order) {
            total(static_cast<Eigen::Index>(i)) += g(before.with(i)) - g(before);
            before = before.with(i);
        }
        ++orders;
    } while (std::next_permutation(order.begin(), order.end()));
    return total / Rational(orders);
}

// Oracle: the guarantee transform at S by explicit nested loops over the
// coalition's own profiles and the outsiders' profiles.
inline Rational guarantee_by_enumeration(const GameWithStrategies& gws, Coalition s) {
    const std::size_t n = gws.players();
    std::vector<Player> own;
    std::vector<Player> rest;
    for (Player i = 0; i < n; ++i) (s.contains(i) ? own : rest).push_back(i);
    auto profiles_of = [&](const std::vector<Player>& who) {
        std::vector<std::vector<std::size_t>> out{{}};
        for (Player i : who) {
            std::vector<std::vector<std::size_t>> next;
            for (const auto& partial : out)
                for (std::size_t t = 0; t < gws.strategy_count(i); ++t) {
                    auto p = partial;
                    p.push_back(t);
                    next.push_back(std::move(p));
                }
            out = std::move(next);
        }
        return out;
    };
    const bool value = gws.orientation() == Orientation::value;
    std::optional<Rational> best;
    for (const auto& mine : profiles_of(own)) {
        std::optional<Rational> worst;
        for (const auto& theirs : profiles_of(rest)) {
            StrategyProfile x{std::vector<std::size_t>(n)};
            for (std::size_t k = 0; k < own.size(); ++k) x[own[k]] = mine[k];
            for (std::size_t k = 0; k < rest.size(); ++k) x[rest[k]] = theirs[k];
            const Rational w = game_at(gws, x)(s);
            if (!worst || (value ? w < *worst : w > *worst)) worst = w;
        }
        if (!best || (value ? *worst > *best : *worst < *best)) best = *worst;
    }
    return *best;
}

// Oracle for n <= 3 value games: the core is a bounded polytope, so it is
// nonempty iff some basic solution (efficiency plus n-1 tight coalition
// constraints, solved by Cramer's rule) satisfies every constraint.
inline bool core_nonempty_by_cramer(const TUGame& g) {
    const std::size_t n = g.players();
    using Row = std::vector<Rational>;
    auto det = [](std::vector<Row> m) {
        const std::size_t k = m.size();
        if (k == 1) return m[0][0];
        if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    auto row_of = [&](Coalition s) {
        Row r(n);
        for (Player i = 0; i < n; ++i) r[i] = s.contains(i) ? 1 : 0;
        return r;
    };
    auto feasible = [&](const std::vector<Rational>& x) {
        for (std::uint32_t bits = 1; bits < coalition_count(n); ++bits) {
            Rational sum = 0;
            for (Player i = 0; i < n; ++i)
                if (Coalition{bits}.contains(i)) sum += x[i];
            if (sum < g(Coalition{bits})) return false;
            if (Coalition{bits} == g.grand() && sum != g(g.grand())) return false;
        }
        return true;
    };
    std::vector<Coalition> proper;
    for (std::uint32_t bits = 1; bits < g.grand().bits(); ++bits) proper.emplace_back(bits);
    std::vector<std::vector<Coalition>> choices{{}};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::vector<std::vector<Coalition>> next;
        for (const auto& c : choices)
            for (const auto& s : proper)
                if (c.empty() || c.back() < s) {
                    auto d = c;
                    d.push_back(s);
                    next.push_back(std::move(d));
                }
        choices = std::move(next);
    }
    for (const auto& tight : choices) {
        std::vector<Row> m{row_of(g.grand())};
        std::vector<Rational> rhs{g(g.grand())};
        for (const auto& s : tight) {
            m.push_back(row_of(s));
            rhs.push_back(g(s));
        }
        const Rational d = det(m);
        if (d == 0) continue;
        std::vector<Rational> x(n);
        for (std::size_t col = 0; col < n; ++col) {
            auto mc = m;
            for (std::size_t r = 0; r < n; ++r) mc[r][col] = rhs[r];
            x[col] = det(mc) / d;
        }
        if (feasible(x)) return true;
    }
    return false;
}

}  // namespace tugs::test

#endif  // TUGS_TESTS_SUPPORT_HPP
