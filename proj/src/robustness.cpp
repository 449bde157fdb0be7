#include "crnt/robustness.hpp"

#include "crnt/symbolic.hpp"

#include <algorithm>
#include <set>

namespace crnt {

const char* const kPositiveSteadyStateCaveat =
    "assumes the mass action system admits a positive steady state; this is not verified symbolically";

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::DeficiencyZero: return "deficiency-zero";
        case Provenance::DeficiencyOne: return "deficiency-one";
        case Provenance::TranslatedProper: return "translated-proper";
        case Provenance::TranslatedResolvable: return "translated-resolvable";
        case Provenance::TranslatedStarFree: return "translated-star-free";
        case Provenance::TranslatedNonterminal: return "translated-nonterminal";
        case Provenance::AdjustmentFactor: return "adjustment-factor";
        case Provenance::RobustnessSpace: return "robustness-space";
    }
    return "?";
}

namespace {

std::vector<Polynomial> plain_edges(const Network& net) {
    std::vector<Polynomial> e;
    for (std::size_t j = 0; j < net.m(); ++j) e.push_back(Polynomial::variable(static_cast<SymbolId>(j)));
    return e;
}

std::vector<SymbolId> starred_symbols(const GeneralizedNetwork& gnet) {
    std::vector<SymbolId> out;
    for (auto r : gnet.improper_set) out.push_back(symbol_id(RateSymbol{r, true}));
    return out;
}

bool star_free(const RationalFunction& f, const std::vector<SymbolId>& stars) {
    for (auto s : stars)
        if (depends_on(f, s)) return false;
    return true;
}

bool star_free(const FormalPowerProduct& f, const std::vector<SymbolId>& stars) {
    for (auto s : stars)
        if (depends_on(f, s)) return false;
    return true;
}

QVec difference(const Network& net, std::size_t a, std::size_t b) {
    const auto& ya = net.complexes()[a];
    const auto& yb = net.complexes()[b];
    QVec d(net.n());
    for (std::size_t i = 0; i < net.n(); ++i) d[i] = static_cast<long>(ya[i] - yb[i]);
    return d;
}

}  // namespace

std::vector<RobustPair> robust_pairs_direct(const Network& net) {
    std::vector<RobustPair> out;
    auto rep = analyze(net);
    if (rep.deficiency == 0 && rep.weakly_reversible) {
        auto edge = plain_edges(net);
        for (const auto& lc : rep.linkage_classes) {
            std::vector<Polynomial> K;
            for (auto v : lc) K.push_back(tree_constant(net, v, edge));
            for (std::size_t a = 0; a < lc.size(); ++a)
                for (std::size_t b = a + 1; b < lc.size(); ++b) {
                    RationalFunction ratio = RationalFunction(K[a], K[b]).simplified();
                    out.push_back({lc[a], lc[b], FormalPowerProduct(ratio), Provenance::DeficiencyZero, false});
                }
        }
    } else if (rep.deficiency == 1) {
        std::vector<std::size_t> nonterminal;
        for (std::size_t v = 0; v < net.c(); ++v)
            if (!rep.is_terminal(v)) nonterminal.push_back(v);
        for (std::size_t a = 0; a < nonterminal.size(); ++a)
            for (std::size_t b = a + 1; b < nonterminal.size(); ++b)
                out.push_back({nonterminal[a], nonterminal[b], std::nullopt, Provenance::DeficiencyOne, true});
    }
    return out;
}

Resolvability resolvability(const Network& net, const GeneralizedNetwork& gnet, const TranslatedRates& rates) {
    (void)net;
    Resolvability res;
    if (gnet.proper()) {
        res.resolvable = true;
        return res;
    }
    auto d = generalized_deficiencies(gnet);
    if (d.stoichiometric != 0 || !d.weakly_reversible) {
        res.notes.push_back("resolvability is only certified for weakly reversible translations of deficiency zero");
        return res;
    }
    if (!gnet.kinetics_total()) {
        res.notes.push_back("kinetic complexes are not assigned at every improper vertex");
        return res;
    }
    auto stars = starred_symbols(gnet);
    bool ok = true;
    for (auto r : gnet.improper_set) {
        std::size_t y = gnet.original.reactions()[r].source;
        std::size_t hv = *gnet.kinetic[*gnet.g_map[y]];
        std::string label = gnet.original.reactions()[r].label;
        try {
            auto f = adjustment_factor(gnet, y, hv, rates);
            if (!star_free(f.product, stars)) {
                res.notes.push_back("adjustment factor for " + label + " depends on a starred rate constant");
                ok = false;
                continue;
            }
            Substitution s;
            s.reaction = r;
            s.factor = f.flat ? FormalPowerProduct(f.flat->simplified()) : f.product;
            if (f.flat) s.rate = (*f.flat * RationalFunction(Polynomial::variable(static_cast<SymbolId>(r)))).simplified();
            res.substitutions.push_back(std::move(s));
        } catch (const SymbolicError& e) {
            res.notes.push_back("adjustment factor for " + label + ": " + e.what());
            ok = false;
        }
    }
    if (ok) {
        res.resolvable = true;
    } else {
        res.substitutions.clear();
    }
    return res;
}

TranslatedPairs robust_pairs_translated(const Network& net, const GeneralizedNetwork& gnet, const TranslatedRates& rates) {
    TranslatedPairs out;
    auto d = generalized_deficiencies(gnet);
    auto rep = analyze(gnet.base);
    bool proper = gnet.proper();
    auto stars = starred_symbols(gnet);

    if (d.stoichiometric == 0 && d.weakly_reversible) {
        if (!gnet.kinetics_total()) {
            out.notes.push_back("kinetic complexes are not assigned at every improper vertex");
            return out;
        }
        if (!proper) out.resolvability = resolvability(net, gnet, rates);
        bool resolvable = proper || out.resolvability.resolvable.value_or(false);
        bool can_substitute = resolvable;
        for (const auto& s : out.resolvability.substitutions)
            if (!s.rate) can_substitute = false;

        auto edge = edge_rates(rates);
        for (const auto& lc : rep.linkage_classes) {
            std::vector<Polynomial> K;
            for (auto v : lc) K.push_back(tree_constant(gnet.base, v, edge));
            for (std::size_t a = 0; a < lc.size(); ++a)
                for (std::size_t b = a + 1; b < lc.size(); ++b) {
                    std::size_t y = *gnet.kinetic[lc[a]], yp = *gnet.kinetic[lc[b]];
                    RationalFunction ratio = RationalFunction(K[a], K[b]).simplified();
                    if (proper) {
                        out.pairs.push_back({y, yp, FormalPowerProduct(ratio), Provenance::TranslatedProper, false});
                    } else if (star_free(ratio, stars)) {
                        out.pairs.push_back({y, yp, FormalPowerProduct(ratio), Provenance::TranslatedStarFree, false});
                    } else if (resolvable) {
                        std::optional<FormalPowerProduct> value;
                        if (can_substitute) {
                            RationalFunction sub = ratio;
                            for (const auto& s : out.resolvability.substitutions)
                                sub = sub.substitute(symbol_id(RateSymbol{s.reaction, true}), *s.rate);
                            value = FormalPowerProduct(sub.simplified());
                        }
                        out.pairs.push_back({y, yp, value, Provenance::TranslatedResolvable, false});
                    }
                }
        }
        if (!proper) {
            for (auto v : gnet.improper_vertices()) {
                const auto& cand = gnet.candidates[v];
                for (std::size_t a = 0; a < cand.size(); ++a)
                    for (std::size_t b = a + 1; b < cand.size(); ++b) {
                        try {
                            auto f = adjustment_factor(gnet, cand[a], cand[b], rates);
                            if (!star_free(f.product, stars)) {
                                out.notes.push_back("adjustment factor between " + net.format_complex(cand[a]) + " and " +
                                                    net.format_complex(cand[b]) + " depends on a starred rate constant");
                                continue;
                            }
                            FormalPowerProduct value = f.flat ? FormalPowerProduct(f.flat->simplified()) : f.product;
                            out.pairs.push_back({cand[a], cand[b], value, Provenance::AdjustmentFactor, false});
                        } catch (const SymbolicError& e) {
                            out.notes.push_back("no adjustment factor between " + net.format_complex(cand[a]) + " and " +
                                                net.format_complex(cand[b]) + ": " + e.what());
                        }
                    }
            }
        }
        return out;
    }
    if (d.stoichiometric == 1) {
        std::vector<std::size_t> sources;
        for (std::size_t y = 0; y < net.c(); ++y)
            if (gnet.g_map[y] && !rep.is_terminal(*gnet.g_map[y])) sources.push_back(y);
        for (std::size_t a = 0; a < sources.size(); ++a)
            for (std::size_t b = a + 1; b < sources.size(); ++b)
                out.pairs.push_back({sources[a], sources[b], std::nullopt, Provenance::TranslatedNonterminal, true});
        if (!proper) out.notes.push_back("improper translation of deficiency one: pairs hold only if the translation is resolvable");
        return out;
    }
    out.notes.push_back("translated network has stoichiometric deficiency " + std::to_string(d.stoichiometric) +
                        (d.weakly_reversible ? "" : " and is not weakly reversible") + "; no translated criterion applies");
    return out;
}

RobustnessReport acr_report(const Network& net, const std::vector<RobustPair>& pairs) {
    RobustnessReport rep;
    rep.pairs = pairs;
    std::vector<QVec> diffs;
    for (const auto& p : pairs) diffs.push_back(difference(net, p.y, p.y_prime));
    auto keep = independent_subset(diffs);
    for (auto k : keep) rep.space_basis.push_back(diffs[k]);

    std::vector<std::size_t> valued_idx;
    std::vector<QVec> valued;
    for (std::size_t p = 0; p < pairs.size(); ++p)
        if (pairs[p].value) {
            valued_idx.push_back(p);
            valued.push_back(diffs[p]);
        }
    auto vkeep = independent_subset(valued);
    std::vector<QVec> vbasis;
    for (auto k : vkeep) vbasis.push_back(valued[k]);

    bool conditional = false;
    for (const auto& p : pairs) conditional = conditional || p.conditional;

    for (std::size_t i = 0; i < net.n(); ++i) {
        QVec e(net.n(), Q(0));
        e[i] = 1;
        if (!in_span(e, rep.space_basis).in_span) continue;
        AcrClaim claim;
        claim.species = i;
        auto vs = in_span(e, vbasis);
        std::set<Provenance> provs;
        if (vs.in_span) {
            FormalPowerProduct value;
            for (std::size_t t = 0; t < vkeep.size(); ++t) {
                if (sgn(vs.coeffs[t]) == 0) continue;
                std::size_t p = valued_idx[vkeep[t]];
                claim.combination.emplace_back(p, vs.coeffs[t]);
                provs.insert(pairs[p].provenance);
                value = value * pairs[p].value->pow(vs.coeffs[t]);
            }
            if (auto f = value.flatten()) {
                claim.flat = f->simplified();
                claim.value = FormalPowerProduct(*claim.flat);
            } else {
                claim.value = value;
            }
        } else {
            auto all = in_span(e, rep.space_basis);
            for (std::size_t t = 0; t < keep.size(); ++t) {
                if (sgn(all.coeffs[t]) == 0) continue;
                claim.combination.emplace_back(keep[t], all.coeffs[t]);
                provs.insert(pairs[keep[t]].provenance);
            }
        }
        claim.sources.assign(provs.begin(), provs.end());
        rep.acr.push_back(std::move(claim));
    }
    if (conditional) rep.caveats.push_back(kPositiveSteadyStateCaveat);
    return rep;
}

GeneralizedNetwork select_kinetics(const GeneralizedNetwork& gnet, std::size_t cap) {
    auto choices = kinetic_choices(gnet);
    if (choices.size() > cap) choices.resize(cap);
    std::optional<GeneralizedNetwork> best;
    std::tuple<int, std::size_t, std::size_t> best_score{-1, 0, 0};
    for (const auto& ch : choices) {
        GeneralizedNetwork g = choose_kinetics(gnet, ch);
        auto rates = translated_rates(g);
        auto tp = robust_pairs_translated(g.original, g, rates);
        auto rep = acr_report(g.original, tp.pairs);
        std::size_t valued_acr = 0, valued_pairs = 0;
        for (const auto& a : rep.acr)
            if (a.value) ++valued_acr;
        for (const auto& p : tp.pairs)
            if (p.value) ++valued_pairs;
        std::tuple<int, std::size_t, std::size_t> score{tp.resolvability.resolvable.value_or(false) ? 1 : 0, valued_acr,
                                                        valued_pairs};
        if (!best || score > best_score) {
            best = std::move(g);
            best_score = score;
        }
    }
    return *best;
}

}  // namespace crnt
