#include "crnt/report.hpp"

#include <algorithm>
#include <sstream>

namespace crnt {

namespace {

Json complex_list(const Network& net, const std::vector<std::size_t>& cs) {
    Json a = Json::array();
    for (auto c : cs) a.push_back(net.format_complex(c));
    return a;
}

std::string shift_text(const Network& net, const std::vector<std::int64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!out.empty()) out += " ";
        out += v[i] > 0 ? "+" : "-";
        if (std::llabs(v[i]) != 1) out += std::to_string(std::llabs(v[i]));
        out += net.species()[i].name;
    }
    return out.empty() ? "0" : out;
}

std::string reaction_text(const Network& net, std::size_t r) {
    const auto& rx = net.reactions()[r];
    return rx.label + ": " + net.format_complex(rx.source) + " -> " + net.format_complex(rx.product);
}

Json q_json(const Q& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return to_string(q);
}

Json fpp_json(const FormalPowerProduct& f) { return f.to_string(); }

}  // namespace

Json complex_json(const Network& net, std::size_t c) { return net.format_complex(c); }

Json structure_json(const Network& net, const StructureReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["c"] = rep.c;
    j["l"] = rep.l;
    j["s"] = rep.s;
    j["deficiency"] = rep.deficiency;
    j["m"] = rep.m;
    j["weakly_reversible"] = rep.weakly_reversible;
    Json species = Json::array();
    for (const auto& s : net.species()) species.push_back(s.name);
    j["species"] = species;
    Json complexes = Json::array();
    for (std::size_t c = 0; c < net.c(); ++c) complexes.push_back(net.format_complex(c));
    j["complexes"] = complexes;
    Json lcs = Json::array();
    for (const auto& lc : rep.linkage_classes) lcs.push_back(complex_list(net, lc));
    j["linkage_classes"] = lcs;
    Json slcs = Json::array();
    for (std::size_t k = 0; k < rep.strong_linkage_classes.size(); ++k) {
        Json e;
        e["complexes"] = complex_list(net, rep.strong_linkage_classes[k]);
        e["terminal"] = std::find(rep.terminal_slcs.begin(), rep.terminal_slcs.end(), k) != rep.terminal_slcs.end();
        slcs.push_back(e);
    }
    j["strong_linkage_classes"] = slcs;
    return j;
}

Json modes_json(const Network& net, const std::vector<ElementaryMode>& modes) {
    Json a = Json::array();
    for (std::size_t k = 0; k < modes.size(); ++k) {
        const auto& md = modes[k];
        Json e;
        e["index"] = k;
        e["kind"] = to_string(md.kind);
        Json sup = Json::array();
        for (auto r : md.support) sup.push_back(net.reactions()[r].label);
        e["support"] = sup;
        e["flux"] = md.flux;
        e["unit_support"] = md.unit_support;
        a.push_back(e);
    }
    Json j;
    j["modes"] = a;
    return j;
}

Json translation_json(const Network& net, const TranslationOutcome& t) {
    Json j;
    j["status"] = to_string(t.solution.status);
    j["objective"] = t.solution.has_assignment ? q_json(t.solution.objective) : Json(nullptr);
    j["nodes"] = t.solution.nodes;
    j["stoichiometric_modes"] = t.model.stoich_modes.size();
    j["cyclic_modes"] = t.model.cyclic_modes.size();
    j["skipped_modes"] = t.model.skipped_modes.size();
    if (t.scheme) {
        Json sch = Json::object();
        for (std::size_t r = 0; r < net.m(); ++r)
            sch[net.reactions()[r].label] = shift_text(net, t.scheme->scheme.shift(r));
        j["scheme"] = sch;
        Json un = Json::array();
        for (auto k : t.scheme->untranslated_modes) un.push_back(k);
        j["untranslated_modes"] = un;
    }
    if (t.gnet) {
        const auto& g = *t.gnet;
        Json tn;
        Json rx = Json::array();
        for (std::size_t r = 0; r < g.base.m(); ++r) rx.push_back(reaction_text(g.base, r));
        tn["reactions"] = rx;
        Json kin = Json::array();
        for (std::size_t v = 0; v < g.base.c(); ++v) {
            Json e;
            e["vertex"] = g.base.format_complex(v);
            e["kinetic"] = g.kinetic[v] ? Json(net.format_complex(*g.kinetic[v])) : Json(nullptr);
            kin.push_back(e);
        }
        tn["vertices"] = kin;
        tn["proper"] = g.proper();
        Json ri = Json::array();
        for (auto r : g.improper_set) ri.push_back(net.reactions()[r].label);
        tn["improper_reactions"] = ri;
        tn["improper_vertices"] = g.improper_vertices().size();
        tn["linkage_classes"] = t.translated_linkage_classes;
        tn["stoichiometric_deficiency"] = t.deficiencies->stoichiometric;
        tn["kinetic_deficiency"] = t.deficiencies->kinetic ? Json(*t.deficiencies->kinetic) : Json(nullptr);
        tn["weakly_reversible"] = t.deficiencies->weakly_reversible;
        j["translated_network"] = tn;
    }
    Json notes = Json::array();
    for (const auto& n : t.notes) notes.push_back(n);
    j["notes"] = notes;
    return j;
}

Json robustness_json(const Network& net, const RobustnessOutcome& r, bool acr_only) {
    const auto& rep = r.report;
    Json j;
    if (!acr_only) {
        Json pairs = Json::array();
        for (const auto& p : rep.pairs) {
            Json e;
            e["y"] = net.format_complex(p.y);
            e["y_prime"] = net.format_complex(p.y_prime);
            e["value"] = p.value ? fpp_json(*p.value) : Json(nullptr);
            e["provenance"] = to_string(p.provenance);
            e["conditional"] = p.conditional;
            pairs.push_back(e);
        }
        j["pairs"] = pairs;
        Json basis = Json::array();
        for (const auto& v : rep.space_basis) {
            Json row = Json::array();
            for (const auto& q : v) row.push_back(q_json(q));
            basis.push_back(row);
        }
        j["space_basis"] = basis;
    }
    Json acr = Json::array();
    for (const auto& a : rep.acr) {
        Json e;
        e["species"] = net.species()[a.species].name;
        e["value"] = a.flat ? Json(a.flat->to_string()) : a.value ? fpp_json(*a.value) : Json(nullptr);
        Json src = Json::array();
        src.push_back(to_string(Provenance::RobustnessSpace));
        for (auto p : a.sources) src.push_back(to_string(p));
        e["provenance"] = src;
        acr.push_back(e);
    }
    j["acr"] = acr;
    if (!rep.resolvability_evaluated)
        j["resolvable"] = nullptr;
    else
        j["resolvable"] = rep.resolvable ? Json(*rep.resolvable ? "true" : "false") : Json("unknown");
    Json subs = Json::array();
    for (const auto& s : rep.substitutions) {
        Json e;
        std::string name = symbol_name(RateSymbol{s.reaction, true});
        e["symbol"] = name;
        e["factor"] = fpp_json(s.factor);
        e["rate"] = s.rate ? Json(s.rate->to_string()) : Json(nullptr);
        subs.push_back(e);
    }
    j["substitutions"] = subs;
    Json cav = Json::array();
    for (const auto& c : rep.caveats) cav.push_back(c);
    j["caveats"] = cav;
    if (!acr_only) {
        Json notes = Json::array();
        for (const auto& n : rep.notes) notes.push_back(n);
        j["notes"] = notes;
        j["translation"] = translation_json(net, r.translation);
    }
    return j;
}

Json verification_json(const VerificationTable& table) {
    Json j;
    j["sampling"] = table.sampling;
    Json rows = Json::array();
    for (const auto& r : table.rows) {
        Json e;
        e["claim"] = r.claim;
        e["trials"] = r.trials;
        e["converged"] = r.converged;
        e["max_rel_err"] = r.max_rel_err;
        e["verdict"] = r.verdict;
        rows.push_back(e);
    }
    j["claims"] = rows;
    return j;
}

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_null()) return "none";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool all_scalar(const Json& a) {
    for (const auto& e : a)
        if (e.is_object()) return false;
        else if (e.is_array() && !all_scalar(e)) return false;
    return true;
}

std::string inline_array(const Json& a) {
    std::string out = "[";
    bool first = true;
    for (const auto& e : a) {
        if (!first) out += ", ";
        out += e.is_array() ? inline_array(e) : scalar_text(e);
        first = false;
    }
    return out + "]";
}

void render(std::ostringstream& out, const Json& obj, int indent);

void render_value(std::ostringstream& out, const std::string& key, const Json& v, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        out << pad << key << ":\n";
        render(out, v, indent + 2);
    } else if (v.is_array()) {
        if (v.empty()) {
            out << pad << key << ": (none)\n";
        } else if (all_scalar(v)) {
            out << pad << key << ": " << inline_array(v) << "\n";
        } else {
            out << pad << key << ":\n";
            for (const auto& e : v) {
                if (e.is_object()) {
                    std::ostringstream sub;
                    render(sub, e, indent + 4);
                    std::string s = sub.str();
                    if (s.size() < static_cast<std::size_t>(indent) + 4) {
                        out << pad << "  - {}\n";
                        continue;
                    }
                    s.replace(static_cast<std::size_t>(indent) + 2, 2, "- ");
                    out << s;
                } else {
                    out << pad << "  - " << (e.is_array() ? inline_array(e) : scalar_text(e)) << "\n";
                }
            }
        }
    } else {
        out << pad << key << ": " << scalar_text(v) << "\n";
    }
}

void render(std::ostringstream& out, const Json& obj, int indent) {
    for (auto it = obj.begin(); it != obj.end(); ++it) render_value(out, it.key(), it.value(), indent);
}

}  // namespace

std::string render_text(const Json& doc) {
    std::ostringstream out;
    if (doc.is_object())
        render(out, doc, 0);
    else
        render_value(out, "result", doc, 0);
    return out.str();
}

}  // namespace crnt
