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

#ifndef TUGS_COALITION_HPP
#define TUGS_COALITION_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace tugs {

using Player = std::size_t;

/// Hard cap on player count; tables hold 2^n worths.
inline constexpr std::size_t kMaxPlayers = 16;

/// A set of players as a bitmask over indices 0..n-1.
class Coalition {
public:
    constexpr Coalition() = default;
    constexpr explicit Coalition(std::uint32_t bits) : bits_(bits) {}

    static constexpr Coalition empty() { return Coalition{}; }
    static constexpr Coalition singleton(Player i) { return Coalition{std::uint32_t{1} << i}; }
    static constexpr Coalition grand(std::size_t n) { return Coalition{(std::uint32_t{1} << n) - 1}; }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr std::size_t index() const { return bits_; }
    constexpr bool is_empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(Player i) const { return (bits_ >> i) & 1U; }
    constexpr bool is_subset_of(Coalition other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool disjoint(Coalition other) const { return (bits_ & other.bits_) == 0; }

    constexpr Coalition with(Player i) const { return Coalition{bits_ | (std::uint32_t{1} << i)}; }
    constexpr Coalition without(Player i) const { return Coalition{bits_ & ~(std::uint32_t{1} << i)}; }
    /// Complement within the grand coalition of an n-player game.
    constexpr Coalition complement(std::size_t n) const { return Coalition{grand(n).bits_ & ~bits_}; }

    friend constexpr Coalition operator|(Coalition a, Coalition b) { return Coalition{a.bits_ | b.bits_}; }
    friend constexpr Coalition operator&(Coalition a, Coalition b) { return Coalition{a.bits_ & b.bits_}; }
    friend constexpr auto operator<=>(Coalition, Coalition) = default;

private:
    std::uint32_t bits_ = 0;
};

/// Number of coalitions of an n-player game, 2^n.
constexpr std::size_t coalition_count(std::size_t n) { return std::size_t{1} << n; }

/// Calls f(T) for every subset T of S, including the empty set and S itself.
template <class F>
void for_each_subset(Coalition s, F&& f) {
    std::uint32_t t = s.bits();
    while (true) {
        f(Coalition{t});
        if (t == 0) break;
        t = (t - 1) & s.bits();
    }
}

}  // namespace tugs

#endif  // TUGS_COALITION_HPP
