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

#include "tugs/cli.hpp"

#include "tugs/classes.hpp"
#include "tugs/generator.hpp"
#include "tugs/instance_io.hpp"
#include "tugs/procedures.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace tugs {

namespace {

using Json = nlohmann::ordered_json;

std::string read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream hex;
    for (unsigned int k = 0; k < length; ++k) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[k]};
    return hex.str();
}

std::string label(Coalition s, const std::vector<std::string>& players) {
    std::string out = "{";
    for (Player i = 0; i < players.size(); ++i) {
        if (!s.contains(i)) continue;
        if (out.size() > 1) out += ",";
        out += players[i];
    }
    return out + "}";
}

Json allocation_json(const Allocation& a) {
    Json arr = Json::array();
    for (const auto& x : a) arr.push_back(to_string(x));
    return arr;
}

std::string allocation_text(const Allocation& a) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < a.size(); ++i) out += (i ? "," : "") + to_string(a(i));
    return out + ")";
}

Json verdict_json(const Verdict& v) {
    Json j;
    j["holds"] = v.holds;
    j["applicable"] = v.applicable;
    j["cases"] = v.cases;
    if (!v.holds) j["failure"] = v.failure;
    return j;
}

// Aligned columns for --pretty output.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.resize(c + 1, 0);
            width[c] = std::max(width[c], row[c].size());
        }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            if (c + 1 < row.size()) cell += std::string(width[c] - cell.size() + 2, ' ');
            line += cell;
        }
        out << line << "\n";
    }
}

void print_game(std::ostream& out, const std::string& name, const TUGame& g, const std::vector<std::string>& players) {
    std::vector<std::string> header{"S"};
    std::vector<std::string> row{name};
    // Paper-style order: by size, then by bitmask.
    std::vector<Coalition> order;
    for (std::uint32_t bits = 1; bits < coalition_count(g.players()); ++bits) order.emplace_back(bits);
    std::stable_sort(order.begin(), order.end(), [](Coalition a, Coalition b) { return a.size() < b.size(); });
    for (const Coalition s : order) {
        header.push_back(label(s, players));
        row.push_back(to_string(g(s)));
    }
    print_table(out, {header, row});
}

Allocation parse_allocation(const std::string& text, std::size_t n) {
    std::vector<Rational> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = text.find(',', start);
        parts.push_back(parse_rational(text.substr(start, at == std::string::npos ? std::string::npos : at - start)));
        if (at == std::string::npos) break;
        start = at + 1;
    }
    if (parts.size() != n)
        throw InputError("allocation has " + std::to_string(parts.size()) + " entries for " + std::to_string(n) +
                         " players");
    Allocation a(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) a(static_cast<Eigen::Index>(i)) = parts[i];
    return a;
}

struct Loaded {
    Instance instance;
    Json header;
};

Loaded load(const std::string& path, const std::string& echo) {
    const std::string bytes = read_bytes(path);
    Loaded l{parse_instance(bytes), Json::object()};
    l.header["command"] = echo;
    l.header["input_sha256"] = sha256_hex(bytes);
    l.header["orientation"] = std::string(to_string(l.instance.family.orientation()));
    l.header["players"] = l.instance.players;
    return l;
}

TransformResult run_procedure(const GameWithStrategies& gws, const std::optional<std::string>& proc) {
    return proc ? transform(gws, parse_procedure(*proc)) : guarantee_transform(gws);
}

std::string default_procedure(const GameWithStrategies& gws) {
    return gws.orientation() == Orientation::value ? "maxmin" : "minmax";
}

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << "\n"; }

int cmd_transform(const std::string& file, const std::optional<std::string>& proc, bool pretty,
                  const std::string& echo, std::ostream& out) {
    Loaded l = load(file, echo);
    const auto& gws = l.instance.family;
    const TransformResult r = run_procedure(gws, proc);
    const std::string name = proc.value_or(default_procedure(gws));

    if (pretty) {
        print_game(out, name, r.game, l.instance.players);
        out << "\nwitnesses\n";
        std::vector<std::vector<std::string>> rows;
        for (std::uint32_t bits = 1; bits < coalition_count(gws.players()); ++bits)
            rows.push_back({label(Coalition{bits}, l.instance.players),
                            profile_key(r.witness_for(Coalition{bits}), l.instance.strategies)});
        print_table(out, rows);
        return kExitOk;
    }
    Json report = l.header;
    report["procedure"] = name;
    Json rows = Json::array();
    for (std::uint32_t bits = 1; bits < coalition_count(gws.players()); ++bits) {
        Json row;
        row["coalition"] = coalition_key(Coalition{bits}, l.instance.players);
        row["worth"] = to_string(r.game(Coalition{bits}));
        row["witness"] = profile_key(r.witness_for(Coalition{bits}), l.instance.strategies);
        rows.push_back(std::move(row));
    }
    report["transform"] = std::move(rows);
    emit(out, report);
    return kExitOk;
}

int cmd_shapley(const std::string& file, const std::optional<std::string>& proc, bool pretty,
                const std::string& echo, std::ostream& out) {
    Loaded l = load(file, echo);
    const TUGame g = run_procedure(l.instance.family, proc).game;
    const Allocation phi = shapley(g);
    if (pretty) {
        std::vector<std::string> header{"player"};
        std::vector<std::string> row{"shapley"};
        for (std::size_t i = 0; i < l.instance.players.size(); ++i) {
            header.push_back(l.instance.players[i]);
            row.push_back(to_string(phi(static_cast<Eigen::Index>(i))));
        }
        print_table(out, {header, row});
        return kExitOk;
    }
    Json report = l.header;
    report["procedure"] = proc.value_or(default_procedure(l.instance.family));
    Json values = Json::object();
    for (std::size_t i = 0; i < l.instance.players.size(); ++i)
        values[l.instance.players[i]] = to_string(phi(static_cast<Eigen::Index>(i)));
    report["shapley"] = std::move(values);
    emit(out, report);
    return kExitOk;
}

int cmd_core(const std::string& file, const std::optional<std::string>& proc, bool want_witness, bool want_vertices,
             const std::optional<std::string>& member, bool pretty, const std::string& echo, std::ostream& out) {
    Loaded l = load(file, echo);
    const TUGame g = run_procedure(l.instance.family, proc).game;
    const CoreCheck check = core_nonempty(g);
    std::optional<std::vector<Allocation>> vertices;
    if (want_vertices) {
        if (g.players() > kMaxVertexPlayers)
            throw InputError("--vertices supports at most " + std::to_string(kMaxVertexPlayers) + " players");
        vertices = core_vertices(g);
    }
    std::optional<Allocation> point;
    if (member) point = parse_allocation(*member, g.players());

    if (pretty) {
        out << "core " << (check.nonempty ? "nonempty" : "empty") << "\n";
        if (want_witness && check.witness) out << "witness " << allocation_text(*check.witness) << "\n";
        if (vertices)
            for (const auto& v : *vertices) out << "vertex " << allocation_text(v) << "\n";
        if (point) out << "member " << allocation_text(*point) << " " << (core_membership(g, *point) ? "yes" : "no") << "\n";
        return kExitOk;
    }
    Json report = l.header;
    report["procedure"] = proc.value_or(default_procedure(l.instance.family));
    report["balanced"] = check.nonempty;
    if (want_witness) report["witness"] = check.witness ? allocation_json(*check.witness) : Json(nullptr);
    if (vertices) {
        Json arr = Json::array();
        for (const auto& v : *vertices) arr.push_back(allocation_json(v));
        report["vertices"] = std::move(arr);
    }
    if (point) {
        Json m;
        m["allocation"] = allocation_json(*point);
        m["in_core"] = core_membership(g, *point);
        report["member"] = std::move(m);
    }
    emit(out, report);
    return kExitOk;
}

int finish_checks(const Json& checks, Json report, bool pretty, std::ostream& out) {
    bool ok = true;
    for (const auto& [name, v] : checks.items())
        if (v.contains("holds") && !v["holds"].get<bool>()) ok = false;
    if (pretty) {
        for (const auto& [name, v] : checks.items()) {
            if (!v.contains("holds")) {
                out << "INFO  " << name << " " << v.dump() << "\n";
                continue;
            }
            out << (v["holds"].get<bool>() ? "PASS  " : "FAIL  ") << name << "  cases=" << v["cases"].get<std::size_t>()
                << (v["applicable"].get<bool>() ? "" : " (vacuous)");
            if (v.contains("failure")) out << "  " << v["failure"].get<std::string>();
            out << "\n";
        }
    } else {
        report["checks"] = checks;
        report["all_hold"] = ok;
        emit(out, report);
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_check(const std::string& file, bool axioms, bool inheritance, bool intersection, std::size_t samples,
              std::uint64_t seed, bool pretty, const std::string& echo, std::ostream& out) {
    if (int(axioms) + int(inheritance) + int(intersection) != 1)
        throw InputError("check needs exactly one of --axioms, --inheritance, --core-intersection N");
    Loaded l = load(file, echo);
    const auto& gws = l.instance.family;
    Json checks = Json::object();

    if (axioms) {
        checks["individual_objectivity"] = verdict_json(check_individual_objectivity(gws));
        // Shift every nonempty worth down by one to get a pointwise smaller family.
        std::vector<TUGame> lower;
        for (const auto& g : gws.table()) {
            std::vector<Rational> w(g.worths().begin(), g.worths().end());
            for (std::size_t k = 1; k < w.size(); ++k) w[k] -= 1;
            lower.emplace_back(g.players(), g.orientation(), std::move(w));
        }
        const GameWithStrategies shifted({gws.strategy_counts().begin(), gws.strategy_counts().end()}, gws.orientation(),
                                         std::move(lower));
        checks["monotonicity"] = verdict_json(check_monotonicity_axiom(gws, shifted));
        checks["dominated_strategies"] = verdict_json(check_irrelevance_dominated_strategies(gws));
        checks["dominated_threats"] = verdict_json(check_irrelevance_dominated_threats(gws));
        Verdict merge;
        for (std::uint32_t bits = 1; bits < coalition_count(gws.players()); ++bits) {
            const Verdict v = check_merge_invariance(gws, Coalition{bits});
            merge.applicable = true;
            merge.cases += v.cases;
            if (!v.holds && merge.holds) {
                merge.holds = false;
                merge.failure = v.failure;
            }
        }
        checks["merge_invariance"] = verdict_json(merge);
    } else if (inheritance) {
        checks["superadditivity"] = verdict_json(check_superadditivity_transmission(gws));
        checks["monotonicity"] = verdict_json(check_monotonicity_transmission(gws));
        // Not theorems; reported for information.
        const TUGame psi = guarantee_transform(gws).game;
        auto value_view = [](const TUGame& g) { return g.orientation() == Orientation::value ? g : negate(g); };
        bool all_balanced = true;
        bool all_convex = true;
        for (const auto& g : gws.table()) {
            all_balanced = all_balanced && core_nonempty(g).nonempty;
            all_convex = all_convex && is_convex(value_view(g));
        }
        Json balanced;
        balanced["every_game"] = all_balanced;
        balanced["transform"] = core_nonempty(psi).nonempty;
        checks["balancedness"] = std::move(balanced);
        Json convex;
        convex["every_game"] = all_convex;
        convex["transform"] = is_convex(value_view(psi));
        checks[gws.orientation() == Orientation::value ? "convexity" : "concavity"] = std::move(convex);
    } else {
        checks["core_intersection"] = verdict_json(check_core_intersection(gws, sample_allocations(gws, samples, seed)));
    }
    return finish_checks(checks, l.header, pretty, out);
}

int cmd_class(const std::string& file, const std::string& which, bool pretty, const std::string& echo,
              std::ostream& out) {
    Loaded l = load(file, echo);
    const auto& gws = l.instance.family;
    const auto& names = l.instance.players;
    Json report = l.header;
    Json body;

    if (which == "airport") {
        const bool family = is_airport_family(gws);
        body["airport_family"] = family;
        const auto top = most_costly_player(gws);
        body["most_costly_player"] = top ? Json(names[*top]) : Json(nullptr);
        if (family) {
            const TUGame psi = minmax(gws).game;
            const AirportCondition cond = airport_sufficient_condition(psi);
            Json c;
            c["holds"] = cond.holds;
            c["pivot"] = cond.pivot ? Json(names[*cond.pivot]) : Json(nullptr);
            if (cond.minorant) {
                Json d = Json::object();
                for (Player i = 0; i < names.size(); ++i) d[names[i]] = to_string((*cond.minorant)(Coalition::singleton(i)));
                c["runway_costs"] = std::move(d);
            }
            body["sufficient_condition"] = std::move(c);
            body["balanced"] = core_nonempty(psi).nonempty;
            body["concave"] = is_convex(negate(psi));
        }
    } else {
        const bool family = is_simple_family(gws);
        body["simple_family"] = family;
        if (family) {
            const auto ch = simple_core_characterization(gws);
            const TUGame psi = maxmin(gws).game;
            body["veto_condition"] = ch.nonempty;
            body["veto_player"] = ch.player ? Json(names[*ch.player]) : Json(nullptr);
            body["transform_simple"] = is_simple(psi);
            body["balanced"] = core_nonempty(psi).nonempty;
        }
    }

    if (pretty) {
        for (const auto& [k, v] : body.items()) out << std::left << std::setw(22) << k << v.dump() << "\n";
        return kExitOk;
    }
    report[which] = std::move(body);
    emit(out, report);
    return kExitOk;
}

int cmd_gen(std::uint64_t seed, std::size_t n, std::size_t max_strats, const std::string& cls,
            const std::string& output, bool pretty, const std::string& echo, std::ostream& out) {
    const Instance inst = [&] {
        try {
            return generate_instance(seed, n, max_strats, parse_instance_class(cls));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }();
    const std::string text = dump_instance(inst);
    std::ofstream file(output, std::ios::binary);
    if (!file) throw InputError("cannot write '" + output + "'");
    file << text;
    if (pretty) {
        out << "wrote " << output << " (" << inst.family.profile_count() << " profiles)\n";
        return kExitOk;
    }
    Json report;
    report["command"] = echo;
    report["output"] = output;
    report["output_sha256"] = sha256_hex(text);
    report["profiles"] = inst.family.profile_count();
    emit(out, report);
    return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Transform TU-games with strategies into TU-games and analyse them", "tugs"};
    app.require_subcommand(1);

    std::string file;
    std::string proc_name;
    bool pretty = false;
    auto common = [&](CLI::App* sub, bool with_proc) {
        sub->add_option("file", file, "Instance document (JSON)")->required();
        sub->add_flag("--pretty", pretty, "Aligned human-readable tables");
        if (with_proc)
            sub->add_option("--proc", proc_name, "Transform procedure")
                ->check(CLI::IsMember({"maxmin", "minmax", "maxmax"}));
    };

    auto* transform_cmd = app.add_subcommand("transform", "Apply a transform procedure");
    common(transform_cmd, true);

    auto* shapley_cmd = app.add_subcommand("shapley", "Shapley value of the transformed game");
    common(shapley_cmd, true);

    bool want_witness = false;
    bool want_vertices = false;
    std::string member_text;
    auto* core_cmd = app.add_subcommand("core", "Core of the transformed game");
    common(core_cmd, true);
    core_cmd->add_flag("--witness", want_witness, "Report a core allocation");
    core_cmd->add_flag("--vertices", want_vertices, "Report the core vertices (n <= 5)");
    auto* member_opt = core_cmd->add_option("--member", member_text, "Test membership of a1,a2,...");

    bool axioms = false;
    bool inheritance = false;
    std::size_t sample_count = 0;
    std::uint64_t seed = 1;
    auto* check_cmd = app.add_subcommand("check", "Verify axioms and inheritance results on an instance");
    common(check_cmd, false);
    check_cmd->add_flag("--axioms", axioms, "Axioms satisfied by the guarantee transform");
    check_cmd->add_flag("--inheritance", inheritance, "Property transmission through the transform");
    auto* samples_opt = check_cmd->add_option("--core-intersection", sample_count, "Core intersection with N sampled allocations");
    check_cmd->add_option("--seed", seed, "Sampling seed");

    std::string which;
    auto* class_cmd = app.add_subcommand("class", "Airport or simple family analysis");
    common(class_cmd, false);
    class_cmd->add_option("kind", which, "airport or simple")->required()->check(CLI::IsMember({"airport", "simple"}));

    std::size_t n = 3;
    std::size_t max_strats = 3;
    std::string cls;
    std::string output;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->add_option("--seed", seed, "Seed")->required();
    gen_cmd->add_option("--n", n, "Player count (1-4)")->required();
    gen_cmd->add_option("--class", cls, "general, superadditive, monotone, simple or airport")->required();
    gen_cmd->add_option("--max-strats", max_strats, "Strategies per player at most (1-3)");
    gen_cmd->add_option("-o,--output", output, "Output file")->required();
    gen_cmd->add_flag("--pretty", pretty, "Human-readable summary");

    std::string echo;
    for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    const std::optional<std::string> proc = proc_name.empty() ? std::nullopt : std::optional(proc_name);
    const std::optional<std::string> member =
        member_opt->count() ? std::optional(member_text) : std::nullopt;

    try {
        if (*transform_cmd) return cmd_transform(file, proc, pretty, echo, out);
        if (*shapley_cmd) return cmd_shapley(file, proc, pretty, echo, out);
        if (*core_cmd) return cmd_core(file, proc, want_witness, want_vertices, member, pretty, echo, out);
        if (*check_cmd) return cmd_check(file, axioms, inheritance, samples_opt->count() > 0, sample_count, seed, pretty, echo, out);
        if (*class_cmd) return cmd_class(file, which, pretty, echo, out);
        if (*gen_cmd) return cmd_gen(seed, n, max_strats, cls, output, pretty, echo, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace tugs
