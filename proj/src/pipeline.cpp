#include "crnt/pipeline.hpp"

#include <algorithm>

namespace crnt {

TranslationOutcome run_translation(const Network& net, const PipelineOptions& opts) {
    TranslationOutcome out;
    out.modes = enumerate_modes(net);
    out.model = build_model(net, out.modes, opts.milp);
    for (const auto& w : out.model.warnings) out.notes.push_back(w);
    out.solution = solve(out.model, opts.limits);
    out.limit_hit = out.solution.status == MilpStatus::Limit;
    if (!out.solution.has_assignment) {
        out.notes.push_back("translation search returned no assignment: " + out.solution.message);
        return out;
    }
    out.scheme = extract_scheme(out.solution, out.model);
    GeneralizedNetwork g = apply_scheme(net, out.scheme->scheme);
    g = select_kinetics(g);
    out.deficiencies = generalized_deficiencies(g);
    out.rates = translated_rates(g);
    out.translated_linkage_classes = analyze(g.base).l;
    out.gnet = std::move(g);
    return out;
}

RobustnessOutcome run_robustness(const Network& net, const PipelineOptions& opts) {
    RobustnessOutcome out;
    out.structure = analyze(net);
    out.direct_pairs = robust_pairs_direct(net);
    out.translation = run_translation(net, opts);

    std::vector<RobustPair> all = out.direct_pairs;
    if (out.translation.gnet) {
        out.translated_pairs = robust_pairs_translated(net, *out.translation.gnet, *out.translation.rates);
        for (const auto& p : out.translated_pairs.pairs) {
            bool seen = std::any_of(all.begin(), all.end(), [&](const RobustPair& q) {
                return q.y == p.y && q.y_prime == p.y_prime && q.provenance == p.provenance;
            });
            if (!seen) all.push_back(p);
        }
    }
    out.report = acr_report(net, all);
    if (out.translation.gnet) {
        const auto& g = *out.translation.gnet;
        out.report.resolvability_evaluated = true;
        if (g.proper()) {
            out.report.resolvable = true;
        } else {
            out.report.resolvable = out.translated_pairs.resolvability.resolvable;
            out.report.substitutions = out.translated_pairs.resolvability.substitutions;
            for (const auto& n : out.translated_pairs.resolvability.notes) out.report.notes.push_back(n);
        }
        for (const auto& n : out.translated_pairs.notes) out.report.notes.push_back(n);
        if (!out.translated_pairs.pairs.empty() &&
            std::find(out.report.caveats.begin(), out.report.caveats.end(), kPositiveSteadyStateCaveat) ==
                out.report.caveats.end())
            out.report.caveats.push_back(kPositiveSteadyStateCaveat);
    }
    for (const auto& n : out.translation.notes) out.report.notes.push_back(n);
    return out;
}

}  // namespace crnt
