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

#include "tugs/tu_game.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace tugs {

std::string_view to_string(Orientation o) { return o == Orientation::value ? "value" : "cost"; }

Orientation flip(Orientation o) { return o == Orientation::value ? Orientation::cost : Orientation::value; }

TUGame::TUGame(std::size_t n, Orientation orientation, std::vector<Rational> worths)
    : n_(n), orientation_(orientation), worths_(std::move(worths)) {
    if (n_ == 0 || n_ > kMaxPlayers)
        throw std::invalid_argument("player count must be in [1, 16], got " + std::to_string(n_));
    if (worths_.size() != coalition_count(n_))
        throw std::invalid_argument("worth table must have 2^n entries");
    if (worths_[0] != 0) throw std::invalid_argument("worth of the empty coalition must be 0");
}

const Rational& TUGame::worth(Coalition s) const {
    if (s.index() >= worths_.size())
        throw std::out_of_range("coalition " + std::to_string(s.bits()) + " outside a " + std::to_string(n_) +
                                "-player game");
    return worths_[s.index()];
}

TUGame make_game(std::size_t n, Orientation orientation, const std::map<Coalition, Rational>& entries) {
    if (n == 0 || n > kMaxPlayers)
        throw std::invalid_argument("player count must be in [1, 16], got " + std::to_string(n));
    std::vector<Rational> worths(coalition_count(n));
    for (const auto& [s, w] : entries) {
        if (s.index() >= worths.size())
            throw std::invalid_argument("coalition " + std::to_string(s.bits()) + " outside the player set");
        if (s.is_empty() && w != 0) throw std::invalid_argument("nonzero worth for the empty coalition");
        worths[s.index()] = w;
    }
    return TUGame(n, orientation, std::move(worths));
}

Rational coalition_sum(const Allocation& a, Coalition s) {
    Rational sum = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (s.contains(static_cast<Player>(i))) sum += a(i);
    return sum;
}

Allocation shapley(const TUGame& g) {
    const std::size_t n = g.players();
    // weight[s] = s! (n - s - 1)! / n!, the share of orders in which the
    // player joins exactly a given s-coalition.
    std::vector<Rational> weight(n);
    Rational w = Rational(1) / Rational(static_cast<long>(n));
    weight[0] = w;
    for (std::size_t s = 1; s < n; ++s) {
        w = w * Rational(static_cast<long>(s)) / Rational(static_cast<long>(n - s));
        weight[s] = w;
    }

    Allocation phi = Allocation::Zero(static_cast<Eigen::Index>(n));
    const Coalition grand = g.grand();
    for (Player i = 0; i < n; ++i) {
        Rational total = 0;
        for_each_subset(grand.without(i), [&](Coalition s) { total += weight[s.size()] * (g(s.with(i)) - g(s)); });
        phi(static_cast<Eigen::Index>(i)) = total;
    }
    return phi;
}

namespace {

void require_value(const TUGame& g, const char* what) {
    if (g.orientation() != Orientation::value)
        throw std::invalid_argument(std::string(what) + " expects a value game; negate cost games first");
}

}  // namespace

bool is_superadditive(const TUGame& g) {
    require_value(g, "is_superadditive");
    const Coalition grand = g.grand();
    for (std::uint32_t bits = 1; bits <= grand.bits(); ++bits) {
        const Coalition s{bits};
        bool ok = true;
        for_each_subset(s.complement(g.players()), [&](Coalition t) {
            if (ok && !t.is_empty() && g(s | t) < g(s) + g(t)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool is_monotone(const TUGame& g) {
    // Comparing each coalition with its one-player extensions covers every
    // subset pair by transitivity.
    const std::size_t n = g.players();
    for (std::uint32_t bits = 0; bits < coalition_count(n); ++bits) {
        const Coalition s{bits};
        for (Player i = 0; i < n; ++i)
            if (!s.contains(i) && g(s) > g(s.with(i))) return false;
    }
    return true;
}

bool is_convex(const TUGame& g) {
    require_value(g, "is_convex");
    const std::size_t n = g.players();
    const Coalition grand = g.grand();
    for (Player i = 0; i < n; ++i) {
        const Coalition others = grand.without(i);
        bool ok = true;
        for_each_subset(others, [&](Coalition t) {
            if (!ok) return;
            const Rational at_t = g(t.with(i)) - g(t);
            for_each_subset(t, [&](Coalition s) {
                if (ok && g(s.with(i)) - g(s) > at_t) ok = false;
            });
        });
        if (!ok) return false;
    }
    return true;
}

bool is_simple(const TUGame& g) {
    for (const auto& w : g.worths())
        if (w != 0 && w != 1) return false;
    return g(g.grand()) == 1 && is_monotone(g);
}

bool is_veto(const TUGame& g, Player i) {
    if (i >= g.players()) throw std::out_of_range("player " + std::to_string(i) + " out of range");
    return g(g.grand().without(i)) == 0;
}

bool core_membership(const TUGame& g, const Allocation& a) {
    if (static_cast<std::size_t>(a.size()) != g.players())
        throw std::invalid_argument("allocation length differs from the player count");
    const Coalition grand = g.grand();
    if (coalition_sum(a, grand) != g(grand)) return false;
    const bool cost = g.orientation() == Orientation::cost;
    for (std::uint32_t bits = 1; bits < grand.bits(); ++bits) {
        const Coalition s{bits};
        const Rational sum = coalition_sum(a, s);
        if (cost ? sum > g(s) : sum < g(s)) return false;
    }
    return true;
}

namespace {

// Balancing-weights LP: maximize sum_S lambda_S v(S) subject to
// sum_{S containing i} lambda_S = 1, lambda >= 0. Its optimum equals
// min { sum_i x_i : x(S) >= v(S) for all S }, and the simplex multipliers
// are an optimal x. The core is nonempty iff the optimum is v(N).
// Balancing LP over all nonempty coalitions: column j is the indicator of
// coalition j + 1 and its cost is the worth. Pricing uses subset sums of the
// multipliers, one addition per coalition.
class BalancingModel {
public:
    explicit BalancingModel(const TUGame& g) : g_(g), sums_(coalition_count(g.players())) {}

    Eigen::Index rows() const { return static_cast<Eigen::Index>(g_.players()); }
    Eigen::Index columns() const { return static_cast<Eigen::Index>(sums_.size() - 1); }

    linalg::Vector<Rational> column(Eigen::Index j) const {
        const Coalition s{static_cast<std::uint32_t>(j + 1)};
        linalg::Vector<Rational> out = linalg::Vector<Rational>::Zero(rows());
        for (Eigen::Index i = 0; i < rows(); ++i)
            if (s.contains(static_cast<Player>(i))) out(i) = 1;
        return out;
    }

    Rational cost(Eigen::Index j) const { return g_(Coalition{static_cast<std::uint32_t>(j + 1)}); }

    Eigen::Index entering(const linalg::Vector<Rational>& y, bool bland) const {
        Eigen::Index best = -1;
        Rational best_reduced = 0;
        for (std::uint32_t bits = 1; bits < sums_.size(); ++bits) {
            sums_[bits] = sums_[bits & (bits - 1)] + y(std::countr_zero(bits));
            const Rational& worth = g_(Coalition{bits});
            if (worth <= sums_[bits]) continue;
            if (bland) return static_cast<Eigen::Index>(bits) - 1;
            Rational reduced = worth - sums_[bits];
            if (reduced <= best_reduced) continue;
            best = static_cast<Eigen::Index>(bits) - 1;
            best_reduced = std::move(reduced);
        }
        return best;
    }

private:
    const TUGame& g_;
    mutable std::vector<Rational> sums_;
};

CoreCheck value_core_nonempty(const TUGame& g) {
    const auto n = static_cast<Eigen::Index>(g.players());
    const linalg::Vector<Rational> b = linalg::Vector<Rational>::Ones(n);
    std::vector<Eigen::Index> basis;
    for (Eigen::Index i = 0; i < n; ++i) basis.push_back((Eigen::Index{1} << i) - 1);

    auto lp = linalg::maximize<Rational>(BalancingModel(g), b, std::move(basis));
    if (lp.status != linalg::LpStatus::optimal) throw std::logic_error("balancing LP reported unbounded");

    CoreCheck out;
    out.nonempty = lp.objective == g(g.grand());
    if (out.nonempty) out.witness = lp.dual;
    return out;
}

}  // namespace

CoreCheck core_nonempty(const TUGame& g) {
    if (g.orientation() == Orientation::value) return value_core_nonempty(g);
    CoreCheck out = value_core_nonempty(negate(g));
    if (out.witness) *out.witness = -*out.witness;
    return out;
}

namespace {

bool lex_less(const Allocation& a, const Allocation& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Allocation> value_core_vertices(const TUGame& g) {
    using linalg::Matrix;
    using linalg::Vector;
    const std::size_t n = g.players();
    const auto rows = static_cast<Eigen::Index>(n);

    // Every vertex makes efficiency plus n-1 independent coalition
    // constraints tight. Try each choice of n-1 proper coalitions.
    std::vector<Coalition> proper;
    for (std::uint32_t bits = 1; bits < g.grand().bits(); ++bits) proper.emplace_back(bits);

    std::vector<Allocation> vertices;
    auto consider = [&](const std::vector<Coalition>& tight) {
        Matrix<Rational> a = Matrix<Rational>::Zero(rows, rows);
        Vector<Rational> b(rows);
        for (Eigen::Index r = 0; r < rows; ++r) {
            const Coalition s = r == 0 ? g.grand() : tight[static_cast<std::size_t>(r - 1)];
            for (Eigen::Index i = 0; i < rows; ++i)
                if (s.contains(static_cast<Player>(i))) a(r, i) = 1;
            b(r) = g(s);
        }
        auto x = linalg::solve_exact<Rational>(std::move(a), std::move(b));
        if (x && core_membership(g, *x)) vertices.push_back(std::move(*x));
    };

    std::vector<Coalition> tight;
    auto choose = [&](auto&& self, std::size_t from) -> void {
        if (tight.size() + 1 == n) {
            consider(tight);
            return;
        }
        for (std::size_t k = from; k < proper.size(); ++k) {
            tight.push_back(proper[k]);
            self(self, k + 1);
            tight.pop_back();
        }
    };
    choose(choose, 0);

    std::sort(vertices.begin(), vertices.end(), lex_less);
    vertices.erase(std::unique(vertices.begin(), vertices.end(),
                               [](const Allocation& x, const Allocation& y) { return x == y; }),
                   vertices.end());
    return vertices;
}

}  // namespace

std::vector<Allocation> core_vertices(const TUGame& g) {
    if (g.players() > kMaxVertexPlayers)
        throw std::invalid_argument("core_vertices supports at most 5 players, got " + std::to_string(g.players()));
    if (g.orientation() == Orientation::value) return value_core_vertices(g);
    auto vertices = value_core_vertices(negate(g));
    for (auto& v : vertices) v = -v;
    std::sort(vertices.begin(), vertices.end(), lex_less);
    return vertices;
}

TUGame negate(const TUGame& g) {
    std::vector<Rational> worths(g.worths().begin(), g.worths().end());
    for (auto& w : worths) w = -w;
    return TUGame(g.players(), flip(g.orientation()), std::move(worths));
}

TUGame airport_from_costs(std::span<const Rational> runway_costs) {
    const std::size_t n = runway_costs.size();
    if (n == 0 || n > kMaxPlayers) throw std::invalid_argument("airport game needs 1 to 16 players");
    for (const auto& d : runway_costs)
        if (d < 0) throw std::invalid_argument("runway costs must be nonnegative");
    std::vector<Rational> worths(coalition_count(n));
    for (std::uint32_t bits = 1; bits < worths.size(); ++bits) {
        const Coalition s{bits};
        Rational m = 0;
        for (Player i = 0; i < n; ++i)
            if (s.contains(i)) m = std::max(m, runway_costs[i]);
        worths[bits] = m;
    }
    return TUGame(n, Orientation::cost, std::move(worths));
}

}  // namespace tugs
