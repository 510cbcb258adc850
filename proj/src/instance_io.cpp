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

#include "tugs/instance_io.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace tugs {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kEmptyKey = "∅";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = s.find(sep, start);
        parts.push_back(trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return parts;
}

// Rejects repeated object keys, which the JSON library would otherwise
// silently collapse.
json parse_strict(std::string_view text) {
    std::vector<std::set<std::string>> seen;
    std::vector<std::string> path;  // last key seen at each depth
    auto callback = [&](int depth, json::parse_event_t event, json& parsed) {
        const auto d = static_cast<std::size_t>(depth);
        switch (event) {
            case json::parse_event_t::object_start:
                if (seen.size() <= d) seen.resize(d + 1);
                seen[d].clear();
                break;
            case json::parse_event_t::key: {
                const std::string key = parsed.get<std::string>();
                if (path.size() < d) path.resize(d);
                path[d - 1] = key;
                if (!seen[d - 1].insert(key).second) {
                    if (d == 2 && path[0] == "games") throw InputError("duplicate profile '" + key + "'");
                    if (d == 3 && path[0] == "games")
                        throw InputError("duplicate coalition '" + key + "' in profile '" + path[1] + "'");
                    if (d == 2 && path[0] == "game") throw InputError("duplicate coalition '" + key + "'");
                    throw InputError("duplicate key '" + key + "'");
                }
                break;
            }
            default:
                break;
        }
        return true;
    };
    try {
        return json::parse(text.begin(), text.end(), callback);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

Rational read_worth(const json& value, const std::string& where) {
    try {
        if (value.is_string()) return parse_rational(value.get<std::string>());
        if (value.is_number_integer() || value.is_number_unsigned()) return parse_rational(value.dump());
        if (value.is_number_float()) return parse_rational(value.dump());
    } catch (const std::invalid_argument& e) {
        throw InputError(where + ": " + e.what());
    }
    throw InputError(where + ": worth must be a number or a rational string");
}

std::vector<std::string> read_names(const json& value, const std::string& what) {
    if (!value.is_array()) throw InputError(what + " must be an array of names");
    std::vector<std::string> names;
    std::set<std::string> unique;
    for (const auto& v : value) {
        if (!v.is_string()) throw InputError(what + " must contain strings");
        std::string name{trim(v.get<std::string>())};
        if (name.empty() || name.find_first_of("+,") != std::string::npos || name == kEmptyKey)
            throw InputError("invalid name '" + name + "' in " + what);
        if (!unique.insert(name).second) throw InputError("duplicate name '" + name + "' in " + what);
        names.push_back(std::move(name));
    }
    return names;
}

Coalition read_coalition(std::string_view key, const std::map<std::string, Player, std::less<>>& index,
                         const std::string& where) {
    const std::string_view body = trim(key);
    if (body.empty() || body == kEmptyKey) return Coalition::empty();
    Coalition s;
    for (auto name : split(body, '+')) {
        auto it = index.find(name);
        if (it == index.end())
            throw InputError("unknown player '" + std::string(name) + "' in coalition '" + std::string(key) + "'" +
                             where);
        if (s.contains(it->second))
            throw InputError("player '" + std::string(name) + "' repeated in coalition '" + std::string(key) + "'" +
                             where);
        s = s.with(it->second);
    }
    return s;
}

std::vector<Rational> read_game(const json& entries, std::size_t n,
                                const std::map<std::string, Player, std::less<>>& index, const std::string& where) {
    if (!entries.is_object()) throw InputError("game" + where + " must be an object of coalition worths");
    std::vector<Rational> worths(coalition_count(n));
    std::vector<bool> given(worths.size(), false);
    for (const auto& [key, value] : entries.items()) {
        const Coalition s = read_coalition(key, index, where);
        if (given[s.index()]) throw InputError("duplicate coalition '" + key + "'" + where);
        given[s.index()] = true;
        Rational w = read_worth(value, "coalition '" + key + "'" + where);
        if (s.is_empty() && w != 0) throw InputError("nonzero empty-coalition entry '" + key + "'" + where);
        worths[s.index()] = std::move(w);
    }
    return worths;
}

Orientation read_orientation(const json& doc) {
    if (!doc.contains("orientation")) return Orientation::value;
    const auto& o = doc.at("orientation");
    if (o == "value") return Orientation::value;
    if (o == "cost") return Orientation::cost;
    throw InputError("orientation must be \"value\" or \"cost\"");
}

}  // namespace

std::string coalition_key(Coalition s, const std::vector<std::string>& players) {
    if (s.is_empty()) return std::string(kEmptyKey);
    std::string out;
    for (Player i = 0; i < players.size(); ++i) {
        if (!s.contains(i)) continue;
        if (!out.empty()) out += "+";
        out += players[i];
    }
    return out;
}

std::string profile_key(const StrategyProfile& x, const std::vector<std::vector<std::string>>& strategies) {
    std::string out;
    for (Player i = 0; i < x.choices.size(); ++i) {
        if (i) out += ",";
        out += strategies.at(i).at(x[i]);
    }
    return out;
}

Instance parse_instance(std::string_view json_text) {
    const json doc = parse_strict(json_text);
    if (!doc.is_object()) throw InputError("instance document must be a JSON object");
    const Orientation orientation = read_orientation(doc);
    if (!doc.contains("players")) throw InputError("missing \"players\"");
    std::vector<std::string> players = read_names(doc.at("players"), "players");
    const std::size_t n = players.size();
    if (n == 0 || n > kMaxPlayers) throw InputError("player count must be in [1, 16], got " + std::to_string(n));

    std::map<std::string, Player, std::less<>> player_index;
    for (Player i = 0; i < n; ++i) player_index.emplace(players[i], i);

    if (doc.contains("game")) {
        if (doc.contains("games") || doc.contains("strategies"))
            throw InputError("give either \"game\" or \"strategies\" with \"games\", not both");
        std::vector<Rational> worths = read_game(doc.at("game"), n, player_index, "");
        std::vector<TUGame> table{TUGame(n, orientation, std::move(worths))};
        std::vector<std::vector<std::string>> strategies(n, std::vector<std::string>{"*"});
        return {std::move(players), std::move(strategies),
                GameWithStrategies(std::vector<std::size_t>(n, 1), orientation, std::move(table)), true};
    }

    if (!doc.contains("strategies")) throw InputError("missing \"strategies\"");
    if (!doc.contains("games")) throw InputError("missing \"games\"");
    const auto& strategy_doc = doc.at("strategies");
    if (!strategy_doc.is_array() || strategy_doc.size() != n)
        throw InputError("\"strategies\" must hold one name list per player");

    std::vector<std::vector<std::string>> strategies;
    std::vector<std::size_t> counts;
    std::vector<std::map<std::string, std::size_t, std::less<>>> strategy_index(n);
    for (Player i = 0; i < n; ++i) {
        strategies.push_back(read_names(strategy_doc[i], "strategies of player '" + players[i] + "'"));
        if (strategies.back().empty()) throw InputError("player '" + players[i] + "' has no strategies");
        counts.push_back(strategies.back().size());
        for (std::size_t s = 0; s < counts.back(); ++s) strategy_index[i].emplace(strategies.back()[s], s);
    }

    const std::size_t guard = size_guard();
    std::size_t profiles = 1;
    for (std::size_t c : counts) {
        if (profiles > guard / c) throw InputError("size guard violation: too many strategy profiles");
        profiles *= c;
    }
    if (profiles > guard / coalition_count(n))
        throw InputError("size guard violation: " + std::to_string(profiles) + " profiles x 2^" + std::to_string(n) +
                         " coalitions exceeds " + std::to_string(guard) + " (set GWS_SIZE_GUARD to raise it)");

    const auto& games = doc.at("games");
    if (!games.is_object()) throw InputError("\"games\" must map profile keys to games");

    std::vector<std::optional<TUGame>> table(profiles);
    std::vector<std::size_t> strides(n, 1);
    for (std::size_t i = n - 1; i > 0; --i) strides[i - 1] = strides[i] * counts[i];

    for (const auto& [key, entries] : games.items()) {
        const auto names = split(key, ',');
        if (names.size() != n)
            throw InputError("profile '" + key + "' names " + std::to_string(names.size()) + " strategies for " +
                             std::to_string(n) + " players");
        std::size_t at = 0;
        for (Player i = 0; i < n; ++i) {
            auto it = strategy_index[i].find(names[i]);
            if (it == strategy_index[i].end())
                throw InputError("unknown strategy '" + std::string(names[i]) + "' for player '" + players[i] +
                                 "' in profile '" + key + "'");
            at += it->second * strides[i];
        }
        if (table[at]) throw InputError("duplicate profile '" + key + "'");
        table[at] = TUGame(n, orientation, read_game(entries, n, player_index, " in profile '" + key + "'"));
    }

    std::vector<TUGame> dense;
    dense.reserve(profiles);
    for (std::size_t p = 0; p < profiles; ++p) {
        if (!table[p]) {
            StrategyProfile x{std::vector<std::size_t>(n)};
            std::size_t rest = p;
            for (Player i = 0; i < n; ++i) {
                x[i] = rest / strides[i];
                rest %= strides[i];
            }
            throw InputError("missing profile '" + profile_key(x, strategies) + "'");
        }
        dense.push_back(std::move(*table[p]));
    }
    return {std::move(players), std::move(strategies), GameWithStrategies(counts, orientation, std::move(dense)),
            false};
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_instance(text.str());
}

std::string dump_instance(const Instance& instance) {
    const auto& gws = instance.family;
    ordered_json doc;
    doc["orientation"] = std::string(to_string(gws.orientation()));
    doc["players"] = instance.players;

    auto game_json = [&](const TUGame& g) {
        ordered_json entries = ordered_json::object();
        for (std::uint32_t bits = 1; bits < coalition_count(gws.players()); ++bits)
            entries[coalition_key(Coalition{bits}, instance.players)] = to_string(g(Coalition{bits}));
        return entries;
    };

    if (instance.single_game) {
        doc["game"] = game_json(gws.game_at_index(0));
    } else {
        doc["strategies"] = instance.strategies;
        ordered_json games = ordered_json::object();
        for (std::size_t p = 0; p < gws.profile_count(); ++p)
            games[profile_key(gws.profile_at(p), instance.strategies)] = game_json(gws.game_at_index(p));
        doc["games"] = std::move(games);
    }
    return doc.dump(2) + "\n";
}

void save_instance(const std::filesystem::path& path, const Instance& instance) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << dump_instance(instance);
}

}  // namespace tugs
