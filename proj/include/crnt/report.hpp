#pragma once

#include "crnt/numeric_oracle.hpp"
#include "crnt/pipeline.hpp"

#include <json.hpp>

#include <string>

namespace crnt {

using Json = nlohmann::ordered_json;

Json complex_json(const Network& net, std::size_t c);
Json structure_json(const Network& net, const StructureReport& rep);
Json modes_json(const Network& net, const std::vector<ElementaryMode>& modes);
Json translation_json(const Network& net, const TranslationOutcome& t);
Json robustness_json(const Network& net, const RobustnessOutcome& r, bool acr_only = false);
Json verification_json(const VerificationTable& table);

// Plain-text rendering of a report document; carries exactly the fields of the JSON.
std::string render_text(const Json& doc);

}  // namespace crnt
