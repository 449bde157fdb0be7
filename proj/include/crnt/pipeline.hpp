#pragma once

#include "crnt/elementary_modes.hpp"
#include "crnt/milp.hpp"
#include "crnt/network.hpp"
#include "crnt/robustness.hpp"
#include "crnt/translation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crnt {

struct PipelineOptions {
    MilpOptions milp;
    MilpLimits limits;
};

struct TranslationOutcome {
    std::vector<ElementaryMode> modes;
    MilpModel model;
    MilpSolution solution;
    std::optional<ExtractedScheme> scheme;
    std::optional<GeneralizedNetwork> gnet;  // kinetic complexes already selected
    std::optional<GeneralizedDeficiencies> deficiencies;
    std::optional<TranslatedRates> rates;
    std::size_t translated_linkage_classes = 0;
    bool limit_hit = false;
    std::vector<std::string> notes;
};

TranslationOutcome run_translation(const Network& net, const PipelineOptions& opts);

struct RobustnessOutcome {
    StructureReport structure;
    TranslationOutcome translation;
    std::vector<RobustPair> direct_pairs;
    TranslatedPairs translated_pairs;
    RobustnessReport report;
};

// Structure analysis, direct criteria, translation search, translated criteria, and ACR assembly.
RobustnessOutcome run_robustness(const Network& net, const PipelineOptions& opts);

}  // namespace crnt
