#include "crnt/translation.hpp"

#include "crnt/exact_linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace crnt {

TranslationScheme TranslationScheme::zero(const Network& net) { return {IntMatrix(net.n(), net.m())}; }

namespace {
std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}
}  // namespace

TranslationScheme parse_scheme(const Network& net, const std::string& text) {
    TranslationScheme sc = TranslationScheme::zero(net);
    std::vector<bool> seen(net.m(), false);
    std::stringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "expected 'label: shift'");
        std::string label = trim(line.substr(0, colon));
        auto r = net.find_reaction(label);
        if (!r) throw ParseError(lineno, "unknown reaction " + label);
        if (seen[*r]) throw ParseError(lineno, "reaction " + label + " listed twice");
        seen[*r] = true;
        std::stringstream terms(line.substr(colon + 1));
        std::string tok;
        while (terms >> tok) {
            if (tok == "0") continue;
            if (tok[0] != '+' && tok[0] != '-') throw ParseError(lineno, "term '" + tok + "' needs a sign");
            std::int64_t sign = tok[0] == '-' ? -1 : 1;
            std::size_t k = 1;
            while (k < tok.size() && std::isdigit(static_cast<unsigned char>(tok[k]))) ++k;
            std::int64_t coeff = k > 1 ? std::stoll(tok.substr(1, k - 1)) : 1;
            auto sp = net.find_species(tok.substr(k));
            if (!sp) throw ParseError(lineno, "unknown species in '" + tok + "'");
            sc.shifts(*sp, *r) += sign * coeff;
        }
    }
    return sc;
}

std::string format_scheme(const Network& net, const TranslationScheme& scheme) {
    std::string out;
    for (std::size_t j = 0; j < net.m(); ++j) {
        out += net.reactions()[j].label + ":";
        bool any = false;
        for (std::size_t i = 0; i < net.n(); ++i) {
            auto v = scheme.shifts(i, j);
            if (v == 0) continue;
            any = true;
            out += v > 0 ? " +" : " -";
            if (std::llabs(v) != 1) out += std::to_string(std::llabs(v));
            out += net.species()[i].name;
        }
        if (!any) out += " 0";
        out += "\n";
    }
    return out;
}

void check_scheme(const Network& net, const TranslationScheme& scheme) {
    if (scheme.shifts.rows != net.n() || scheme.shifts.cols != net.m())
        throw TranslationError("translation scheme has wrong dimensions");
    for (std::size_t j = 0; j < net.m(); ++j)
        for (std::size_t i = 0; i < net.n(); ++i) {
            auto v = scheme.shifts(i, j);
            if (net.source(j)[i] + v < 0 || net.product(j)[i] + v < 0)
                throw TranslationError("PosC violated: reaction " + net.reactions()[j].label + ", species " +
                                       net.species()[i].name);
        }
    for (std::size_t a = 0; a < net.m(); ++a)
        for (std::size_t b = a + 1; b < net.m(); ++b)
            if (net.reactions()[a].source == net.reactions()[b].source && scheme.shift(a) != scheme.shift(b))
                throw TranslationError("React violated: reactions " + net.reactions()[a].label + " and " +
                                       net.reactions()[b].label + " share a source but not a translation");
}

bool GeneralizedNetwork::proper() const {
    return std::all_of(candidates.begin(), candidates.end(), [](const auto& c) { return c.size() <= 1; });
}

std::vector<std::size_t> GeneralizedNetwork::improper_vertices() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < candidates.size(); ++v)
        if (candidates[v].size() > 1) out.push_back(v);
    return out;
}

bool GeneralizedNetwork::kinetics_total() const {
    for (std::size_t v = 0; v < candidates.size(); ++v)
        if (!candidates[v].empty() && !kinetic[v]) return false;
    return true;
}

bool GeneralizedNetwork::is_improper_reaction(std::size_t r) const {
    return std::find(improper_set.begin(), improper_set.end(), r) != improper_set.end();
}

const Complex& GeneralizedNetwork::kinetic_complex(std::size_t v) const {
    if (v >= kinetic.size() || !kinetic[v]) throw TranslationError("kinetic complex undefined at vertex " + std::to_string(v));
    return original.complexes()[*kinetic[v]];
}

std::vector<std::size_t> GeneralizedNetwork::preimage(std::size_t rt) const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < f_map.size(); ++r)
        if (f_map[r] == rt) out.push_back(r);
    return out;
}

GeneralizedNetwork apply_scheme(const Network& net, const TranslationScheme& scheme) {
    check_scheme(net, scheme);
    GeneralizedNetwork g;
    g.original = net;
    g.scheme = scheme;
    std::vector<std::string> names;
    for (const auto& s : net.species()) names.push_back(s.name);
    g.base = Network(names);
    g.g_map.assign(net.c(), std::nullopt);
    g.f_map.assign(net.m(), 0);

    struct Merged {
        Complex src, prod;
        std::vector<std::size_t> members;
    };
    std::vector<Merged> merged;
    for (std::size_t j = 0; j < net.m(); ++j) {
        Complex a = net.source(j), b = net.product(j);
        for (std::size_t i = 0; i < net.n(); ++i) {
            a[i] += scheme.shifts(i, j);
            b[i] += scheme.shifts(i, j);
        }
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const Merged& mm) { return mm.src == a && mm.prod == b; });
        if (it == merged.end()) {
            merged.push_back({a, b, {j}});
            g.f_map[j] = merged.size() - 1;
        } else {
            it->members.push_back(j);
            g.f_map[j] = static_cast<std::size_t>(it - merged.begin());
        }
    }
    for (const auto& mm : merged) {
        std::string label;
        for (auto r : mm.members) label += (label.empty() ? "" : "+") + net.reactions()[r].label;
        g.base.add_reaction(label, mm.src, mm.prod);
    }
    g.candidates.assign(g.base.c(), {});
    g.kinetic.assign(g.base.c(), std::nullopt);
    for (std::size_t j = 0; j < net.m(); ++j) {
        std::size_t y = net.reactions()[j].source;
        std::size_t v = g.base.reactions()[g.f_map[j]].source;
        g.g_map[y] = v;
        auto& cand = g.candidates[v];
        if (std::find(cand.begin(), cand.end(), y) == cand.end()) cand.push_back(y);
    }
    for (std::size_t v = 0; v < g.base.c(); ++v)
        if (g.candidates[v].size() == 1) g.kinetic[v] = g.candidates[v][0];
    return g;
}

GeneralizedNetwork choose_kinetics(const GeneralizedNetwork& gnet, const std::map<std::size_t, std::size_t>& choice) {
    GeneralizedNetwork g = gnet;
    for (const auto& [v, y] : choice) {
        if (v >= g.candidates.size()) throw TranslationError("choice refers to an unknown vertex");
        const auto& cand = g.candidates[v];
        if (std::find(cand.begin(), cand.end(), y) == cand.end())
            throw TranslationError("choice for vertex " + g.base.format_complex(v) + " is not in its preimage");
        g.kinetic[v] = y;
    }
    if (!g.kinetics_total()) throw TranslationError("kinetic map not assigned at every improper vertex");
    g.improper_set.clear();
    for (std::size_t r = 0; r < g.original.m(); ++r) {
        std::size_t y = g.original.reactions()[r].source;
        if (*g.kinetic[*g.g_map[y]] != y) g.improper_set.push_back(r);
    }
    return g;
}

std::vector<std::map<std::size_t, std::size_t>> kinetic_choices(const GeneralizedNetwork& gnet) {
    auto verts = gnet.improper_vertices();
    std::vector<std::map<std::size_t, std::size_t>> out;
    std::vector<std::size_t> pos(verts.size(), 0);
    while (true) {
        std::map<std::size_t, std::size_t> c;
        for (std::size_t k = 0; k < verts.size(); ++k) c[verts[k]] = gnet.candidates[verts[k]][pos[k]];
        out.push_back(std::move(c));
        std::size_t k = verts.size();
        while (k > 0) {
            --k;
            if (++pos[k] < gnet.candidates[verts[k]].size()) break;
            pos[k] = 0;
            if (k == 0) return out;
        }
        if (verts.empty()) return out;
    }
}

GeneralizedDeficiencies generalized_deficiencies(const GeneralizedNetwork& gnet) {
    GeneralizedDeficiencies d;
    auto rep = analyze(gnet.base);
    d.stoichiometric = rep.deficiency;
    d.weakly_reversible = rep.weakly_reversible;
    if (rep.weakly_reversible && gnet.kinetics_total()) {
        std::vector<QVec> diffs;
        for (const auto& r : gnet.base.reactions()) {
            const auto& a = gnet.kinetic_complex(r.source);
            const auto& b = gnet.kinetic_complex(r.product);
            QVec v(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) v[i] = static_cast<long>(b[i] - a[i]);
            diffs.push_back(std::move(v));
        }
        long sk = static_cast<long>(independent_subset(diffs).size());
        d.kinetic = static_cast<long>(rep.c) - static_cast<long>(rep.l) - sk;
    }
    return d;
}

TranslatedRates translated_rates(const GeneralizedNetwork& gnet) {
    TranslatedRates tr;
    tr.terms.assign(gnet.base.m(), {});
    for (std::size_t r = 0; r < gnet.original.m(); ++r)
        tr.terms[gnet.f_map[r]].push_back({r, gnet.is_improper_reaction(r)});
    return tr;
}

std::string symbol_name(const RateSymbol& s) {
    return "k" + std::to_string(s.reaction + 1) + (s.starred ? "*" : "");
}

}  // namespace crnt
