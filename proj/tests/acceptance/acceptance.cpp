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

// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when any
// criterion fails.

#include "support.hpp"
#include "tugs/classes.hpp"

#include <functional>
#include <iostream>
#include <sstream>

namespace tugs {
namespace {

using test::alloc;
using test::fixture;
using test::game3;
using test::ints;
using test::listed3;
using test::Q;

// Collects the first mismatch of a criterion.
class Probe {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && failure_.empty()) failure_ = what;
    }
    template <class A, class B>
    void equal(const A& actual, const B& expected, const std::string& what) {
        if (actual == expected || !failure_.empty()) return;
        std::ostringstream s;
        s << what << ": got " << render(actual) << ", expected " << render(expected);
        failure_ = s.str();
    }
    const std::string& failure() const { return failure_; }

private:
    static std::string render(const std::vector<Rational>& xs) {
        std::string out = "(";
        for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + to_string(xs[k]);
        return out + ")";
    }
    static std::string render(const Allocation& a) { return render(std::vector<Rational>(a.begin(), a.end())); }
    static std::string render(const std::vector<Allocation>& as) {
        std::string out = "{";
        for (std::size_t k = 0; k < as.size(); ++k) out += (k ? "," : "") + render(as[k]);
        return out + "}";
    }
    static std::string render(const Rational& q) { return to_string(q); }
    static std::string render(bool b) { return b ? "true" : "false"; }

    std::string failure_;
};

StrategyProfile P(std::initializer_list<std::size_t> xs) { return StrategyProfile{std::vector<std::size_t>(xs)}; }

GameWithStrategies shifted(const GameWithStrategies& gws, const Rational& delta) {
    std::vector<TUGame> table;
    for (const auto& g : gws.table()) {
        std::vector<Rational> w(g.worths().begin(), g.worths().end());
        for (std::size_t s = 1; s < w.size(); ++s) w[s] += delta;
        table.emplace_back(g.players(), g.orientation(), std::move(w));
    }
    const auto counts = gws.strategy_counts();
    return GameWithStrategies({counts.begin(), counts.end()}, gws.orientation(), std::move(table));
}

// Raises the last player's runway cost above everyone else's at every profile.
GameWithStrategies with_costliest_last(const GameWithStrategies& gws) {
    const std::size_t n = gws.players();
    std::vector<TUGame> table;
    for (const auto& g : gws.table()) {
        std::vector<Rational> d(n);
        Rational top = 0;
        for (Player i = 0; i < n; ++i) {
            d[i] = g(Coalition::singleton(i));
            if (d[i] > top) top = d[i];
        }
        d[n - 1] = top + 1;
        table.push_back(airport_from_costs(d));
    }
    const auto counts = gws.strategy_counts();
    return GameWithStrategies({counts.begin(), counts.end()}, Orientation::cost, std::move(table));
}

std::vector<Allocation> sorted(std::vector<Allocation> v) {
    std::sort(v.begin(), v.end(), [](const Allocation& a, const Allocation& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return v;
}

void heirs(Probe& p) {
    const TUGame psi = maxmin(fixture("heirs.json").family).game;
    p.equal(listed3(psi), ints({0, 0, 0, 1, 0, 0, 3}), "maxmin");
    p.equal(shapley(psi), alloc({Q("7/6"), Q("7/6"), Q("4/6")}), "shapley");
}

void subsidy(Probe& p) {
    const TUGame psi = minmax(fixture("subsidy.json").family).game;
    p.equal(listed3(psi), ints({90, 200, 300, 190, 290, 300, 290}), "minmax");
    p.equal(shapley(psi), alloc({Q("70/3"), Q("250/3"), Q("550/3")}), "shapley");
}

void parliament(Probe& p) {
    const TUGame psi = maxmin(fixture("parliament.json").family).game;
    p.equal(listed3(psi), ints({0, 0, 0, 1, 0, 1, 1}), "maxmin");
    p.equal(shapley(psi), alloc({Q("1/6"), Q("4/6"), Q("1/6")}), "shapley");
}

void core_counterexample(Probe& p) {
    const GameWithStrategies gws = fixture("coreempty.json").family;
    const TUGame psi = maxmin(gws).game;
    p.equal(listed3(psi), ints({1, 3, 1, 7, 6, 9, 10}), "maxmin");
    p.equal(core_nonempty(psi).nonempty, false, "core_nonempty(psi)");
    for (const auto& g : gws.table()) p.equal(core_nonempty(g).nonempty, true, "core_nonempty(input)");
}

void guarantee_cores(Probe& p) {
    const GameWithStrategies gws = fixture("coreempty.json").family;
    const Rational psi_n = maxmin(gws).game(Coalition::grand(3));
    const TUGame ulf = guarantee_game(gws, P({0, 0, 0}), psi_n);
    const TUGame urf = guarantee_game(gws, P({0, 1, 0}), psi_n);
    p.equal(listed3(ulf), ints({1, 3, 1, 7, 6, 1, 10}), "V^(U,L,F)");
    p.equal(listed3(urf), ints({1, 1, 1, 2, 6, 9, 10}), "V^(U,R,F)");
    p.equal(core_vertices(ulf), sorted({alloc({4, 3, 3}), alloc({5, 4, 1}), alloc({3, 4, 3}), alloc({6, 3, 1})}),
            "vertices of V^(U,L,F)");
    p.equal(core_vertices(urf), sorted({alloc({1, 1, 8}), alloc({1, 4, 5})}), "vertices of V^(U,R,F)");
}

void convexity(Probe& p) {
    const GameWithStrategies gws = fixture("convexity.json").family;
    for (const auto& g : gws.table()) p.equal(is_convex(g), true, "is_convex(input)");
    const TUGame psi = maxmin(gws).game;
    p.equal(listed3(psi), ints({2, 1, 2, 5, 7, 4, 9}), "maxmin");
    p.equal(is_convex(psi), false, "is_convex(psi)");
    // Player 1's marginal to {2} exceeds its marginal to {2,3}.
    p.equal(psi(Coalition{0b011}) - psi(Coalition{0b010}), Rational(4), "marginal of 1 to {2}");
    p.equal(psi(Coalition{0b111}) - psi(Coalition{0b110}), Rational(5), "marginal of 1 to {2,3}");
    p.equal(core_membership(psi, alloc({3, 2, 4})), true, "(3,2,4) in Core(psi)");
    for (const auto& g : guarantee_games(gws)) p.equal(core_membership(g, alloc({3, 2, 4})), true, "(3,2,4) in Core(V^x)");
}

void sufficiency(Probe& p) {
    const TUGame psi = minmax(fixture("suff.json").family).game;
    p.equal(listed3(psi), ints({2, 9, 9, 7, 5, 9, 8}), "minmax");
    const AirportCondition c = airport_sufficient_condition(psi);
    p.expect(!c.holds && !c.pivot, "airport condition unexpectedly found a pivot");
    p.equal(core_membership(psi, alloc({0, 3, 5})), true, "(0,3,5) in Core(psi)");
    p.equal(is_convex(negate(psi)), false, "concave(psi)");
}

void optimistic(Probe& p) {
    const GameWithStrategies gws = fixture("maxmax.json").family;
    const TUGame bar = maxmax(gws).game;
    p.equal(std::vector<Rational>{bar(Coalition{0b01}), bar(Coalition{0b10}), bar(Coalition{0b11})}, ints({6, 5, 10}),
            "maxmax");
    p.equal(is_superadditive(bar), false, "is_superadditive(maxmax)");
    p.equal(core_nonempty(bar).nonempty, false, "core_nonempty(maxmax)");
    for (const auto& g : gws.table()) {
        p.equal(is_superadditive(g), true, "is_superadditive(input)");
        p.equal(core_nonempty(g).nonempty, true, "core_nonempty(input)");
    }
}

void property_suites(Probe& p) {
    constexpr std::uint64_t kSeeds = 200;
    for (auto cls : {InstanceClass::general, InstanceClass::superadditive, InstanceClass::monotone, InstanceClass::simple,
                     InstanceClass::airport}) {
        for (std::uint64_t seed = 1; seed <= kSeeds && p.failure().empty(); ++seed) {
            const std::size_t n = 1 + seed % 3;
            const GameWithStrategies gws = generate_instance(seed, n, 3, cls).family;
            const std::string tag = std::string(to_string(cls)) + " seed " + std::to_string(seed) + ": ";

            // (a) axioms
            p.expect(check_individual_objectivity(gws).holds, tag + "individual objectivity");
            p.expect(check_monotonicity_axiom(gws, shifted(gws, -1)).holds, tag + "monotonicity");
            p.expect(check_irrelevance_dominated_strategies(gws).holds, tag + "dominated strategies");
            p.expect(check_irrelevance_dominated_threats(gws).holds, tag + "dominated threats");
            for (std::uint32_t bits = 1; bits < coalition_count(n); ++bits)
                p.expect(check_merge_invariance(gws, Coalition{bits}).holds, tag + "merge invariance");

            // (d) core intersection
            const Verdict core = check_core_intersection(gws, sample_allocations(gws, 100, seed));
            p.expect(core.holds, tag + "core intersection " + core.failure);

            const TUGame psi = guarantee_transform(gws).game;
            if (cls == InstanceClass::superadditive) {
                const Verdict v = check_superadditivity_transmission(gws);
                p.expect(v.holds && v.applicable, tag + "superadditivity transmission " + v.failure);
            }
            if (cls == InstanceClass::monotone) {
                const Verdict v = check_monotonicity_transmission(gws);
                p.expect(v.holds && v.applicable, tag + "monotonicity transmission " + v.failure);
            }
            if (cls == InstanceClass::simple) {
                p.expect(is_simple(psi), tag + "simple transform");
                p.expect(simple_core_characterization(gws).nonempty == core_nonempty(psi).nonempty,
                         tag + "veto characterization");
            }
            if (cls == InstanceClass::airport) {
                for (const GameWithStrategies& family : {gws, with_costliest_last(gws)}) {
                    if (!most_costly_player(family)) continue;
                    const TUGame c = minmax(family).game;
                    p.expect(airport_sufficient_condition(c).holds, tag + "pivot condition");
                    p.expect(core_nonempty(c).nonempty, tag + "balanced airport transform");
                }
                p.expect(most_costly_player(with_costliest_last(gws)) == std::optional<Player>{n - 1},
                         tag + "forced pivot");
            }
        }
    }
}

void oracles(Probe& p) {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 50; ++k) {
        const TUGame g = test::random_game(rng, 1 + k % 4);
        p.equal(shapley(g), test::shapley_by_orders(g), "shapley vs permutation oracle #" + std::to_string(k));
    }
    for (int k = 0; k < 50; ++k) {
        const TUGame g = test::random_game(rng, 1 + k % 3);
        p.equal(core_nonempty(g).nonempty, test::core_nonempty_by_cramer(g),
                "core_nonempty vs vertex oracle #" + std::to_string(k));
    }
}

}  // namespace
}  // namespace tugs

int main() {
    using tugs::Probe;
    const std::vector<std::pair<const char*, std::function<void(Probe&)>>> criteria{
        {"heirs example: maxmin and Shapley value", tugs::heirs},
        {"subsidy example: minmax and Shapley value", tugs::subsidy},
        {"parliament example: maxmin and Shapley value", tugs::parliament},
        {"balanced inputs with an empty-core transform", tugs::core_counterexample},
        {"guarantee games and their core vertices", tugs::guarantee_cores},
        {"convex inputs with a non-convex transform", tugs::convexity},
        {"airport family without a pivot but with a core", tugs::sufficiency},
        {"maxmax loses superadditivity and balancedness", tugs::optimistic},
        {"property suites on generated instances", tugs::property_suites},
        {"Shapley and core oracles", tugs::oracles},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Probe probe;
        try {
            criteria[k].second(probe);
        } catch (const std::exception& e) {
            probe.expect(false, std::string("exception: ") + e.what());
        }
        const bool ok = probe.failure().empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "AC" << k + 1 << "  " << criteria[k].first;
        if (!ok) std::cout << "  -- " << probe.failure();
        std::cout << '\n';
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
