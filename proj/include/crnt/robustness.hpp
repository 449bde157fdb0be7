#pragma once

#include "crnt/exact_linalg.hpp"
#include "crnt/network.hpp"
#include "crnt/polynomial.hpp"
#include "crnt/translation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crnt {

// Which criterion produced a robust pair or an ACR claim.
enum class Provenance {
    DeficiencyZero,          // deficiency zero and weakly reversible: same linkage class, tree-constant value
    DeficiencyOne,           // deficiency one: nonterminal complexes, conditional
    TranslatedProper,        // proper translation, deficiency zero: tree-constant ratio
    TranslatedResolvable,    // improper but resolvable: ratio with k* substituted
    TranslatedStarFree,      // improper: ratio free of every k*
    TranslatedNonterminal,   // translated deficiency one: nonterminal vertices, conditional
    AdjustmentFactor,        // merged sources related through the kinetic span
    RobustnessSpace,         // species vector in the span of robust differences
};

const char* to_string(Provenance p);

struct RobustPair {
    std::size_t y = 0;        // complex index in the original network
    std::size_t y_prime = 0;
    std::optional<FormalPowerProduct> value;  // x^y / x^y' at every positive steady state
    Provenance provenance = Provenance::DeficiencyZero;
    bool conditional = false;  // requires a positive steady state (and resolvability when so noted)
};

// k_r* = factor * k_r
struct Substitution {
    std::size_t reaction = 0;
    FormalPowerProduct factor;
    std::optional<RationalFunction> rate;  // factor * k_r when the factor flattens
};

struct Resolvability {
    std::optional<bool> resolvable;  // nullopt = not established
    std::vector<Substitution> substitutions;
    std::vector<std::string> notes;
};

struct TranslatedPairs {
    std::vector<RobustPair> pairs;
    Resolvability resolvability;
    std::vector<std::string> notes;
};

struct AcrClaim {
    std::size_t species = 0;
    std::optional<FormalPowerProduct> value;
    std::optional<RationalFunction> flat;   // simplified value when exponents are integral
    std::vector<Provenance> sources;        // provenance of the pairs used
    std::vector<std::pair<std::size_t, Q>> combination;  // pair index -> alpha, e_i = sum alpha (y - y')
};

struct RobustnessReport {
    std::vector<RobustPair> pairs;
    std::vector<QVec> space_basis;
    std::vector<AcrClaim> acr;
    std::optional<bool> resolvable;  // absent when no translation was used
    bool resolvability_evaluated = false;
    std::vector<Substitution> substitutions;
    std::vector<std::string> caveats;
    std::vector<std::string> notes;
};

extern const char* const kPositiveSteadyStateCaveat;

std::vector<RobustPair> robust_pairs_direct(const Network& net);

Resolvability resolvability(const Network& net, const GeneralizedNetwork& gnet, const TranslatedRates& rates);

TranslatedPairs robust_pairs_translated(const Network& net, const GeneralizedNetwork& gnet, const TranslatedRates& rates);

RobustnessReport acr_report(const Network& net, const std::vector<RobustPair>& pairs);

// Picks the kinetic assignment at improper vertices that is resolvable and yields the most valued ACR
// species, then the most valued pairs. Ties go to the earliest assignment. Enumerates at most `cap` choices.
GeneralizedNetwork select_kinetics(const GeneralizedNetwork& gnet, std::size_t cap = 16);

}  // namespace crnt
