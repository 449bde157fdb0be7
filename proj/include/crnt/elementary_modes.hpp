#pragma once

#include "crnt/network.hpp"

#include <vector>

namespace crnt {

enum class ModeKind { Cyclic, Stoichiometric };

const char* to_string(ModeKind k);

struct ElementaryMode {
    std::vector<std::int64_t> flux;   // length m, gcd 1
    std::vector<std::size_t> support;  // sorted reaction indices
    ModeKind kind = ModeKind::Stoichiometric;
    bool unit_support = false;
};

// Extreme rays of {v >= 0 : Gamma v = 0} by the double description method, sorted by support.
std::vector<ElementaryMode> enumerate_modes(const Network& net);

ModeKind classify(const std::vector<std::int64_t>& flux, const IntMatrix& Ia);

}  // namespace crnt
