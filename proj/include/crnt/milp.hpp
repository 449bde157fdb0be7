#pragma once

#include "crnt/elementary_modes.hpp"
#include "crnt/network.hpp"
#include "crnt/translation.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crnt {

class MilpError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class VarKind { Continuous, Integer, Binary };
enum class Relation { LessEq, GreaterEq, Equal };
enum class Family { React, PosT, PosC, Cycle, Stoich, Count, Perm1, Perm2, Perm3, Perm4, Proper1, Proper2 };

const char* to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);
inline constexpr Family kAllFamilies[] = {Family::React, Family::PosT,  Family::PosC,  Family::Cycle,
                                          Family::Stoich, Family::Count, Family::Perm1, Family::Perm2,
                                          Family::Perm3, Family::Perm4, Family::Proper1, Family::Proper2};

struct Variable {
    std::string name;
    VarKind kind = VarKind::Continuous;
    std::optional<Q> lower;  // nullopt = -infinity
    std::optional<Q> upper;  // nullopt = +infinity
};

struct LinearTerm {
    std::size_t var = 0;
    Q coeff;
};

struct Constraint {
    std::string name;
    std::vector<LinearTerm> terms;
    Relation rel = Relation::LessEq;
    Q rhs;
    Family family = Family::React;
};

struct StoichModeInfo {
    std::size_t mode_index = 0;             // index into the enumerated mode list
    std::vector<std::size_t> support;       // reaction indices, input order
    std::optional<IntMatrix> uhat;          // fixed n x |support| cycle shifts (non-permutation mode)
    std::vector<std::size_t> uhat_vars;     // n x |support| variable indices (permutation mode)
    std::vector<std::size_t> perm_vars;     // |support| x |support| (permutation mode)
    std::size_t sigma_var = 0;
};

struct MilpOptions {
    bool proper = false;
    bool permutations = false;
    bool positive_translations = false;
    std::optional<std::int64_t> bound;
};

struct MilpModel {
    std::vector<Variable> variables;
    std::vector<Constraint> constraints;
    std::vector<LinearTerm> objective;  // minimized
    Q epsilon;
    Q big_m;
    std::int64_t bound = 0;

    // Translation-search metadata; empty for models read back from LP text.
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::size_t> ups_vars;  // n x m, row-major
    std::vector<StoichModeInfo> stoich_modes;
    std::vector<std::size_t> cyclic_modes;
    std::vector<std::size_t> skipped_modes;
    std::vector<std::string> warnings;
    std::vector<std::size_t> tie_break_order;  // Upsilon row-major, then P, then sigma
    IntMatrix gamma_minus;
    IntMatrix gamma_plus;
    std::vector<std::size_t> reaction_sources;

    std::optional<std::size_t> find_variable(const std::string& name) const;
    std::size_t add_variable(const std::string& name, VarKind kind, std::optional<Q> lo, std::optional<Q> hi);
    std::size_t count(Family f) const;
};

MilpModel build_model(const Network& net, const std::vector<ElementaryMode>& modes, const MilpOptions& opts);

// Cycle shifts for a unit-support mode in the given reaction order, shifted to nonnegative minimum.
IntMatrix cycle_shifts(const Network& net, const std::vector<std::size_t>& order);

enum class MilpStatus { Optimal, Infeasible, Limit };
const char* to_string(MilpStatus s);

struct MilpLimits {
    std::size_t node_budget = 200000;
    double time_budget = 60.0;  // seconds
};

struct MilpSolution {
    MilpStatus status = MilpStatus::Infeasible;
    bool has_assignment = false;
    Q objective;
    std::vector<Q> values;
    std::vector<bool> translated;  // per stoichiometric mode in model order: sigma_h == 0
    std::size_t nodes = 0;
    std::string message;
};

MilpSolution solve(const MilpModel& model, const MilpLimits& limits = {});

// Names of constraints (and bound or integrality failures) violated by an assignment, checked exactly.
std::vector<std::string> violations(const MilpModel& model, const std::vector<Q>& values);

struct ExtractedScheme {
    TranslationScheme scheme;
    std::vector<std::size_t> untranslated_modes;  // indices into the enumerated mode list
};

ExtractedScheme extract_scheme(const MilpSolution& sol, const MilpModel& model);

class LpFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string export_lp(const MilpModel& model);
MilpModel parse_lp(const std::string& text);

}  // namespace crnt
