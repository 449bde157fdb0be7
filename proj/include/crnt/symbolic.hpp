#pragma once

#include "crnt/polynomial.hpp"
#include "crnt/translation.hpp"

#include <stdexcept>
#include <vector>

namespace crnt {

class SymbolicError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SymbolId symbol_id(const RateSymbol& s);
RateSymbol rate_symbol(SymbolId s);

// Symbolic rate of each translated reaction: the sum of its preimage symbols.
std::vector<Polynomial> edge_rates(const TranslatedRates& rates);

// Sum over spanning in-trees rooted at vertex of the product of edge rates.
Polynomial tree_constant(const Network& graph, std::size_t vertex, const std::vector<Polynomial>& edge);
Polynomial tree_constant(const GeneralizedNetwork& gnet, std::size_t vertex, const TranslatedRates& rates);

RationalFunction tree_constant_ratio(const Network& graph, std::size_t from, std::size_t to,
                                     const std::vector<Polynomial>& edge);
RationalFunction tree_constant_ratio(const GeneralizedNetwork& gnet, std::size_t from, std::size_t to,
                                     const TranslatedRates& rates);

struct AdjustmentTerm {
    std::size_t vertex = 0;  // translated vertex v
    std::size_t root = 0;    // first vertex of its linkage class
    Q coefficient;           // exponent of K(v)/K(root)
};

struct AdjustmentFactor {
    FormalPowerProduct product;
    std::optional<RationalFunction> flat;
    std::vector<AdjustmentTerm> terms;
};

// Kinetic adjustment factor for original complexes y, y_prime with g(y) = g(y_prime).
// Throws SymbolicError("not in kinetic span") when y - y_prime has no rational decomposition.
AdjustmentFactor adjustment_factor(const GeneralizedNetwork& gnet, std::size_t y, std::size_t y_prime,
                                   const TranslatedRates& rates);

}  // namespace crnt
