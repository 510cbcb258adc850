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

#include "support.hpp"
#include "tugs/tu_game.hpp"

#include <gtest/gtest.h>

#include <random>

namespace tugs {
namespace {

using test::alloc;
using test::game3;
using test::ints;
using test::Q;

TEST(Rational, ParsesIntegersFractionsAndDecimalsExactly) {
    EXPECT_EQ(parse_rational("0.25"), Rational(1) / 4);
    EXPECT_EQ(parse_rational("-2.25"), Rational(-9) / 4);
    EXPECT_EQ(parse_rational("7/6"), Rational(7) / 6);
    EXPECT_EQ(parse_rational("14/12"), Rational(7) / 6);
    EXPECT_EQ(parse_rational("-3"), Rational(-3));
    EXPECT_EQ(parse_rational(".5"), Rational(1) / 2);
    EXPECT_EQ(to_string(parse_rational("4/6")), "2/3");
    EXPECT_EQ(to_string(parse_rational("-0.5")), "-1/2");
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "abc", "1/0", "1.2.3", "1e3", "--1", "1/-2", ".", "3/"})
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Coalition, SubsetEnumerationVisitsEverySubsetOnce) {
    std::vector<std::uint32_t> seen;
    for_each_subset(Coalition{0b1011}, [&](Coalition t) { seen.push_back(t.bits()); });
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(seen, (std::vector<std::uint32_t>{0, 1, 2, 3, 8, 9, 10, 11}));
}

TEST(MakeGame, HeirsGuaranteeGameDefaultsToZero) {
    const TUGame g = make_game(3, Orientation::value, {{Coalition{0b011}, 1}, {Coalition{0b111}, 3}});
    EXPECT_EQ(g(Coalition{0b011}), 1);
    EXPECT_EQ(g(Coalition{0b101}), 0);
    EXPECT_EQ(g(Coalition{0b111}), 3);
}

TEST(MakeGame, EmptyMapIsTheZeroGame) {
    const TUGame g = make_game(2, Orientation::value, {});
    for (const auto& w : g.worths()) EXPECT_EQ(w, 0);
}

TEST(MakeGame, RejectsBadInput) {
    EXPECT_THROW(make_game(3, Orientation::value, {{Coalition{}, 1}}), std::invalid_argument);
    EXPECT_NO_THROW(make_game(3, Orientation::value, {{Coalition{}, 0}}));
    EXPECT_THROW(make_game(0, Orientation::value, {}), std::invalid_argument);
    EXPECT_THROW(make_game(17, Orientation::value, {}), std::invalid_argument);
    EXPECT_THROW(make_game(2, Orientation::value, {{Coalition{0b100}, 1}}), std::invalid_argument);
    EXPECT_THROW(game3(ints({1, 1, 1, 1, 1, 1, 1}))(Coalition{0b1000}), std::out_of_range);
}

TEST(Shapley, HeirsAndSubsidyValues) {
    EXPECT_EQ(shapley(game3(ints({0, 0, 0, 1, 0, 0, 3}))), alloc({Q("7/6"), Q("7/6"), Q("4/6")}));
    const TUGame subsidy = game3(ints({90, 200, 300, 190, 290, 300, 290}), Orientation::cost);
    EXPECT_EQ(shapley(subsidy), alloc({Q("70/3"), Q("250/3"), Q("550/3")}));
}

TEST(Shapley, AdditiveGamePaysEachPlayerTheirOwnWorth) {
    const std::vector<Rational> a{Q("3"), Q("-1/2"), Q("5/3"), Q("0")};
    std::vector<Rational> w(16);
    for (std::uint32_t bits = 1; bits < 16; ++bits)
        for (Player i = 0; i < 4; ++i)
            if (Coalition{bits}.contains(i)) w[bits] += a[i];
    EXPECT_EQ(shapley(TUGame(4, Orientation::value, w)), alloc({a[0], a[1], a[2], a[3]}));
}

TEST(Shapley, MatchesPermutationOracleAndIsEfficient) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const TUGame g = test::random_game(rng, n);
        const Allocation phi = shapley(g);
        EXPECT_EQ(phi, test::shapley_by_orders(g));
        EXPECT_EQ(phi.sum(), g(g.grand()));
    }
}

TEST(Predicates, Superadditivity) {
    EXPECT_TRUE(is_superadditive(game3(ints({1, 3, 1, 7, 6, 9, 10}))));
    EXPECT_FALSE(is_superadditive(TUGame(2, Orientation::value, ints({0, 1, 1, 1}))));
    EXPECT_TRUE(is_superadditive(make_game(3, Orientation::value, {})));
    EXPECT_THROW(is_superadditive(make_game(2, Orientation::cost, {})), std::invalid_argument);
}

TEST(Predicates, Monotonicity) {
    EXPECT_TRUE(is_monotone(game3(ints({0, 0, 0, 1, 0, 1, 1}))));
    EXPECT_FALSE(is_monotone(game3({Q("-0.25"), Q("-0.25"), Q("-0.25"), Q("2.5"), Q("-0.5"), Q("-0.5"), Q("2.25")})));
    EXPECT_TRUE(is_monotone(make_game(3, Orientation::value, {})));
}

TEST(Predicates, Convexity) {
    EXPECT_TRUE(is_convex(game3(ints({2, 1, 3, 4, 7, 4, 9}))));
    EXPECT_TRUE(is_convex(game3(ints({1, 4, 2, 5, 3, 6, 9}))));
    EXPECT_FALSE(is_convex(game3(ints({2, 1, 2, 5, 7, 4, 9}))));
    EXPECT_TRUE(is_convex(game3(ints({1, 2, 3, 3, 4, 5, 6}))));  // additive
}

TEST(Predicates, SimpleAndVeto) {
    const TUGame v1 = game3(ints({0, 0, 0, 1, 0, 0, 1}));
    EXPECT_TRUE(is_simple(v1));
    EXPECT_FALSE(is_simple(make_game(3, Orientation::value, {})));
    EXPECT_FALSE(is_simple(game3(ints({0, 0, 0, 1, 0, 0, 3}))));

    const TUGame vbar = game3(ints({0, 0, 0, 1, 0, 1, 1}));
    EXPECT_TRUE(is_veto(vbar, 1));
    EXPECT_FALSE(is_veto(vbar, 0));
    for (Player i = 0; i < 3; ++i) EXPECT_TRUE(is_veto(make_game(3, Orientation::value, {}), i));
    EXPECT_THROW(is_veto(vbar, 3), std::out_of_range);
}

TEST(Core, Membership) {
    EXPECT_TRUE(core_membership(game3(ints({2, 1, 2, 5, 7, 4, 9})), alloc({3, 2, 4})));
    EXPECT_TRUE(core_membership(game3(ints({2, 9, 9, 7, 5, 9, 8}), Orientation::cost), alloc({0, 3, 5})));
    EXPECT_FALSE(core_membership(game3(ints({2, 1, 2, 5, 7, 4, 9})), alloc({3, 2, 5})));
    EXPECT_THROW(core_membership(game3(ints({2, 1, 2, 5, 7, 4, 9})), alloc({3, 2})), std::invalid_argument);
}

TEST(Core, NonemptinessWithWitness) {
    EXPECT_FALSE(core_nonempty(game3(ints({1, 3, 1, 7, 6, 9, 10}))).nonempty);
    EXPECT_FALSE(core_nonempty(game3(ints({1, 3, 1, 7, 6, 9, 10}))).witness.has_value());

    const TUGame psi = game3(ints({2, 1, 2, 5, 7, 4, 9}));
    const CoreCheck c = core_nonempty(psi);
    ASSERT_TRUE(c.nonempty);
    EXPECT_TRUE(core_membership(psi, *c.witness));

    const TUGame unanimity = game3(ints({0, 0, 0, 0, 0, 0, 1}));
    const CoreCheck u = core_nonempty(unanimity);
    ASSERT_TRUE(u.nonempty);
    EXPECT_TRUE(core_membership(unanimity, *u.witness));
    for (const auto& x : *u.witness) EXPECT_GE(x, 0);

    const TUGame cost = game3(ints({2, 9, 9, 7, 5, 9, 8}), Orientation::cost);
    const CoreCheck k = core_nonempty(cost);
    ASSERT_TRUE(k.nonempty);
    EXPECT_TRUE(core_membership(cost, *k.witness));
}

TEST(Core, OneAndSixteenPlayers) {
    const TUGame solo = TUGame(1, Orientation::value, ints({0, 5}));
    EXPECT_EQ(*core_nonempty(solo).witness, alloc({5}));
    EXPECT_EQ(core_vertices(solo), std::vector<Allocation>{alloc({5})});

    // Symmetric game v(S) = |S|^2 / 16: convex, so balanced.
    std::vector<Rational> w(coalition_count(16));
    for (std::uint32_t bits = 1; bits < w.size(); ++bits) {
        const long s = static_cast<long>(Coalition{bits}.size());
        w[bits] = Rational(s * s) / 16;
    }
    const TUGame big(16, Orientation::value, std::move(w));
    const CoreCheck c = core_nonempty(big);
    ASSERT_TRUE(c.nonempty);
    EXPECT_TRUE(core_membership(big, *c.witness));
}

TEST(Core, NonemptinessMatchesCramerOracle) {
    std::mt19937_64 rng(11);
    int balanced = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const TUGame g = test::random_game(rng, 1 + trial % 3);
        const CoreCheck c = core_nonempty(g);
        EXPECT_EQ(c.nonempty, test::core_nonempty_by_cramer(g));
        if (c.nonempty) {
            ++balanced;
            EXPECT_TRUE(core_membership(g, *c.witness));
        }
    }
    EXPECT_GT(balanced, 0);
}

TEST(Core, VerticesOfGuaranteeGames) {
    EXPECT_EQ(core_vertices(game3(ints({1, 1, 1, 2, 6, 9, 10}))),
              (std::vector<Allocation>{alloc({1, 1, 8}), alloc({1, 4, 5})}));
    EXPECT_EQ(core_vertices(game3(ints({1, 3, 1, 7, 6, 1, 10}))),
              (std::vector<Allocation>{alloc({3, 4, 3}), alloc({4, 3, 3}), alloc({5, 4, 1}), alloc({6, 3, 1})}));
    EXPECT_EQ(core_vertices(game3(ints({1, 2, 3, 3, 4, 5, 6}))), std::vector<Allocation>{alloc({1, 2, 3})});
    EXPECT_TRUE(core_vertices(game3(ints({1, 3, 1, 7, 6, 9, 10}))).empty());
    EXPECT_THROW(core_vertices(make_game(6, Orientation::value, {})), std::invalid_argument);
}

TEST(Core, VerticesAndMidpointsAreMembers) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const TUGame g = test::random_game(rng, n, trial % 2 ? Orientation::cost : Orientation::value);
        const auto vertices = core_vertices(g);
        EXPECT_EQ(vertices.empty(), !core_nonempty(g).nonempty);
        for (std::size_t a = 0; a < vertices.size(); ++a) {
            EXPECT_TRUE(core_membership(g, vertices[a]));
            for (std::size_t b = a + 1; b < vertices.size(); ++b)
                EXPECT_TRUE(core_membership(g, (vertices[a] + vertices[b]) / Rational(2)));
        }
    }
}

TEST(Core, ConvexGamesAreBalanced) {
    std::mt19937_64 rng(3);
    int convex = 0;
    for (int trial = 0; trial < 300; ++trial) {
        // Supermodular by construction: sum of squares of random weights.
        const std::size_t n = 1 + trial % 4;
        std::vector<Rational> weight(n);
        for (auto& x : weight) x = static_cast<long>(rng() % 4);
        std::vector<Rational> w(coalition_count(n));
        for (std::uint32_t bits = 1; bits < w.size(); ++bits) {
            Rational s = 0;
            for (Player i = 0; i < n; ++i)
                if (Coalition{bits}.contains(i)) s += weight[i];
            w[bits] = s * s - static_cast<long>(rng() % 2) * (Coalition{bits}.size() == 1 ? 1 : 0);
        }
        const TUGame g(n, Orientation::value, std::move(w));
        if (!is_convex(g)) continue;
        ++convex;
        EXPECT_TRUE(core_nonempty(g).nonempty);
    }
    EXPECT_GT(convex, 100);
}

TEST(Negate, InvolutionAndCoreCorrespondence) {
    const TUGame c = game3(ints({90, 200, 300, 190, 290, 300, 290}), Orientation::cost);
    const TUGame nc = negate(c);
    EXPECT_EQ(nc.orientation(), Orientation::value);
    EXPECT_EQ(nc(nc.grand()), -290);
    EXPECT_EQ(negate(nc), c);
    EXPECT_EQ(negate(make_game(2, Orientation::value, {})).worths()[3], 0);

    // A cost share a is in Core(c) exactly when the payoff -a is in Core(-c).
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const Allocation a = alloc({static_cast<long>(rng() % 200), static_cast<long>(rng() % 200), 0});
        Allocation b = a;
        b(2) = 290 - a(0) - a(1);
        EXPECT_EQ(core_membership(c, b), core_membership(nc, Allocation(-b)));
    }
    EXPECT_TRUE(core_membership(c, alloc({90, 0, 200})));
}

TEST(Airport, FromRunwayCosts) {
    EXPECT_EQ(airport_from_costs(ints({90, 190, 290})),
              game3(ints({90, 190, 290, 190, 290, 290, 290}), Orientation::cost));
    EXPECT_EQ(airport_from_costs(ints({100, 200, 300})),
              game3(ints({100, 200, 300, 200, 300, 300, 300}), Orientation::cost));
    const TUGame flat = airport_from_costs(ints({4, 4, 4, 4}));
    for (std::uint32_t bits = 1; bits < 16; ++bits) EXPECT_EQ(flat(Coalition{bits}), 4);
    EXPECT_THROW(airport_from_costs(ints({1, -1})), std::invalid_argument);
}

}  // namespace
}  // namespace tugs
