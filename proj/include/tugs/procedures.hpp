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

#ifndef TUGS_PROCEDURES_HPP
#define TUGS_PROCEDURES_HPP

#include "tugs/strategic.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tugs {

enum class Procedure { maxmin, minmax, maxmax };

std::string_view to_string(Procedure p);
/// Parses "maxmin", "minmax" or "maxmax".
Procedure parse_procedure(std::string_view name);

/// A transformed game plus, for every coalition (indexed by bitmask), the
/// full profile at which the optimum is attained: the coalition's optimal
/// own strategies completed by the outsiders' optimal response.
struct TransformResult {
    TUGame game;
    std::vector<StrategyProfile> witness;

    const StrategyProfile& witness_for(Coalition s) const { return witness.at(s.index()); }
};

/// worth(S) = max over S's strategies of min over the outsiders' strategies
/// of V(x)(S). Value families only. Ties go to the lexicographically
/// smallest profile.
TransformResult maxmin(const GameWithStrategies& gws);

/// The cost dual of maxmin: min over own strategies of max over outsiders'.
TransformResult minmax(const GameWithStrategies& gws);

/// worth(S) = max over all profiles of V(x)(S); min for cost families.
TransformResult maxmax(const GameWithStrategies& gws);

/// maxmin for value families, minmax for cost families.
TransformResult guarantee_transform(const GameWithStrategies& gws);

TransformResult transform(const GameWithStrategies& gws, Procedure p);

/// The guarantee transform evaluated at one coalition.
Rational guarantee_worth(const GameWithStrategies& gws, Coalition s);

/// Outcome of an instance-level check. `applicable` is false when the check
/// was vacuous (no case met its hypothesis); `holds` is then true.
struct Verdict {
    bool holds = true;
    bool applicable = false;
    std::size_t cases = 0;
    std::string failure;  ///< first counterexample, empty when holds

    explicit operator bool() const { return holds; }
};

Verdict check_individual_objectivity(const GameWithStrategies& gws);

/// Requires equal shapes and hi's games pointwise >= lo's; then verifies the
/// guarantee transform preserves the order coalition-wise.
Verdict check_monotonicity_axiom(const GameWithStrategies& hi, const GameWithStrategies& lo);

Verdict check_irrelevance_dominated_strategies(const GameWithStrategies& gws);
Verdict check_irrelevance_dominated_threats(const GameWithStrategies& gws);
Verdict check_merge_invariance(const GameWithStrategies& gws, Coalition s);

/// Superadditive games everywhere imply a superadditive transform (costs:
/// subadditive). Vacuous when some table game fails the hypothesis.
Verdict check_superadditivity_transmission(const GameWithStrategies& gws);
Verdict check_monotonicity_transmission(const GameWithStrategies& gws);

/// The transform's core equals the intersection of the guarantee games'
/// cores: checks worth(S) = best_x V^x(S) for every proper S, and membership
/// equivalence on each sample.
Verdict check_core_intersection(const GameWithStrategies& gws, const std::vector<Allocation>& samples);

/// Every guarantee game V^x, in table order.
std::vector<TUGame> guarantee_games(const GameWithStrategies& gws);

}  // namespace tugs

#endif  // TUGS_PROCEDURES_HPP
