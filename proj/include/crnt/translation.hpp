#pragma once

#include "crnt/network.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crnt {

class TranslationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TranslationScheme {
    IntMatrix shifts;  // n x m; column j is the translation complex of reaction j

    static TranslationScheme zero(const Network& net);
    std::vector<std::int64_t> shift(std::size_t j) const { return shifts.column(j); }
};

TranslationScheme parse_scheme(const Network& net, const std::string& text);
std::string format_scheme(const Network& net, const TranslationScheme& scheme);

// Throws TranslationError naming the offending reaction if React or PosC fails.
void check_scheme(const Network& net, const TranslationScheme& scheme);

struct GeneralizedNetwork {
    Network original;
    TranslationScheme scheme;
    Network base;  // stoichiometric complexes and translated reactions
    // kinetic[v] is the original complex chosen as h(v) for a translated source vertex v.
    std::vector<std::optional<std::size_t>> kinetic;
    std::vector<std::size_t> f_map;                // original reaction -> translated reaction
    std::vector<std::optional<std::size_t>> g_map;  // original complex -> translated vertex (sources only)
    std::vector<std::size_t> improper_set;          // original reactions in R_I
    std::vector<std::vector<std::size_t>> candidates;  // translated vertex -> original source complexes

    bool proper() const;
    std::vector<std::size_t> improper_vertices() const;
    bool kinetics_total() const;
    bool is_improper_reaction(std::size_t r) const;
    // Kinetic complex vector of a translated vertex; throws if unassigned.
    const Complex& kinetic_complex(std::size_t v) const;
    // Original reactions mapped onto translated reaction rt, in input order.
    std::vector<std::size_t> preimage(std::size_t rt) const;
};

GeneralizedNetwork apply_scheme(const Network& net, const TranslationScheme& scheme);

// choice maps improper translated vertices to one of their candidate original complexes.
GeneralizedNetwork choose_kinetics(const GeneralizedNetwork& gnet, const std::map<std::size_t, std::size_t>& choice);

// Every kinetic assignment at improper vertices, in lexicographic order of candidate positions.
std::vector<std::map<std::size_t, std::size_t>> kinetic_choices(const GeneralizedNetwork& gnet);

struct GeneralizedDeficiencies {
    long stoichiometric = 0;
    std::optional<long> kinetic;
    bool weakly_reversible = false;
};

GeneralizedDeficiencies generalized_deficiencies(const GeneralizedNetwork& gnet);

struct RateSymbol {
    std::size_t reaction = 0;  // original reaction index
    bool starred = false;
    bool operator==(const RateSymbol&) const = default;
};

struct TranslatedRates {
    std::vector<std::vector<RateSymbol>> terms;  // per translated reaction
};

TranslatedRates translated_rates(const GeneralizedNetwork& gnet);

std::string symbol_name(const RateSymbol& s);

}  // namespace crnt
