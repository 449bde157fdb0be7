#include "crnt/symbolic.hpp"

#include "crnt/exact_linalg.hpp"

#include <algorithm>
#include <functional>

namespace crnt {

SymbolId symbol_id(const RateSymbol& s) {
    return static_cast<SymbolId>(s.reaction) + (s.starred ? kStarOffset : 0);
}

RateSymbol rate_symbol(SymbolId s) {
    if (is_starred(s)) return {static_cast<std::size_t>(s - kStarOffset), true};
    return {static_cast<std::size_t>(s), false};
}

std::vector<Polynomial> edge_rates(const TranslatedRates& rates) {
    std::vector<Polynomial> out;
    for (const auto& terms : rates.terms) {
        Polynomial p;
        for (const auto& s : terms) p += Polynomial::variable(symbol_id(s));
        out.push_back(p);
    }
    return out;
}

namespace {

std::vector<std::size_t> strongly_connected_class(const Network& graph, std::size_t vertex) {
    auto rep = analyze(graph);
    auto lc = rep.linkage_classes[rep.linkage_class_of(vertex)];
    auto slc = rep.strong_linkage_classes[rep.slc_of(vertex)];
    if (lc.size() != slc.size())
        throw SymbolicError("tree constant undefined: linkage class of " + graph.format_complex(vertex) +
                            " is not strongly connected");
    return lc;
}

}  // namespace

Polynomial tree_constant(const Network& graph, std::size_t vertex, const std::vector<Polynomial>& edge) {
    if (edge.size() != graph.m()) throw SymbolicError("edge rate count does not match reactions");
    auto verts = strongly_connected_class(graph, vertex);
    if (verts.size() == 1) return Polynomial(1);

    std::vector<std::size_t> others;
    for (auto v : verts)
        if (v != vertex) others.push_back(v);
    std::vector<std::vector<std::size_t>> out_edges(graph.c());
    for (std::size_t r = 0; r < graph.m(); ++r) out_edges[graph.reactions()[r].source].push_back(r);

    std::vector<long> next(graph.c(), -1);  // chosen successor per vertex
    Polynomial total;
    std::function<void(std::size_t, const Polynomial&)> rec = [&](std::size_t k, const Polynomial& acc) {
        if (k == others.size()) {
            total += acc;
            return;
        }
        std::size_t v = others[k];
        for (auto r : out_edges[v]) {
            std::size_t w = graph.reactions()[r].product;
            next[v] = static_cast<long>(w);
            bool cycle = false;
            std::size_t cur = w;
            while (cur != vertex && next[cur] >= 0) {
                if (cur == v) {
                    cycle = true;
                    break;
                }
                cur = static_cast<std::size_t>(next[cur]);
            }
            if (!cycle && cur == v) cycle = true;
            if (!cycle) rec(k + 1, acc * edge[r]);
            next[v] = -1;
        }
    };
    rec(0, Polynomial(1));
    return total;
}

Polynomial tree_constant(const GeneralizedNetwork& gnet, std::size_t vertex, const TranslatedRates& rates) {
    return tree_constant(gnet.base, vertex, edge_rates(rates));
}

RationalFunction tree_constant_ratio(const Network& graph, std::size_t from, std::size_t to,
                                     const std::vector<Polynomial>& edge) {
    auto rep = analyze(graph);
    if (rep.linkage_class_of(from) != rep.linkage_class_of(to))
        throw SymbolicError("tree constant ratio between different linkage classes");
    if (from == to) return RationalFunction(1);
    return RationalFunction(tree_constant(graph, from, edge), tree_constant(graph, to, edge));
}

RationalFunction tree_constant_ratio(const GeneralizedNetwork& gnet, std::size_t from, std::size_t to,
                                     const TranslatedRates& rates) {
    return tree_constant_ratio(gnet.base, from, to, edge_rates(rates));
}

AdjustmentFactor adjustment_factor(const GeneralizedNetwork& gnet, std::size_t y, std::size_t y_prime,
                                   const TranslatedRates& rates) {
    if (!gnet.g_map.at(y) || !gnet.g_map.at(y_prime) || *gnet.g_map[y] != *gnet.g_map[y_prime])
        throw SymbolicError("adjustment factor requires complexes merged onto one vertex");
    AdjustmentFactor out;
    if (y == y_prime) {
        out.flat = RationalFunction(1);
        return out;
    }
    auto rep = analyze(gnet.base);
    std::size_t n = gnet.original.n();

    std::vector<AdjustmentTerm> gens;
    std::vector<QVec> vecs;
    for (const auto& lc : rep.linkage_classes) {
        std::size_t root = lc.front();
        for (auto v : lc) {
            if (v == root) continue;
            if (!gnet.kinetic[v] || !gnet.kinetic[root])
                throw SymbolicError("kinetic complex undefined in linkage class of " + gnet.base.format_complex(v));
            const auto& hv = gnet.kinetic_complex(v);
            const auto& hr = gnet.kinetic_complex(root);
            QVec d(n);
            for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<long>(hv[i] - hr[i]);
            gens.push_back({v, root, Q(0)});
            vecs.push_back(std::move(d));
        }
    }
    auto keep = independent_subset(vecs);
    std::vector<QVec> basis;
    for (auto k : keep) basis.push_back(vecs[k]);
    const auto& a = gnet.original.complexes()[y];
    const auto& b = gnet.original.complexes()[y_prime];
    QVec target(n);
    for (std::size_t i = 0; i < n; ++i) target[i] = static_cast<long>(a[i] - b[i]);
    auto sol = in_span(target, basis);
    if (!sol.in_span) throw SymbolicError("not in kinetic span");

    auto edge = edge_rates(rates);
    for (std::size_t t = 0; t < keep.size(); ++t) {
        if (sgn(sol.coeffs[t]) == 0) continue;
        AdjustmentTerm term = gens[keep[t]];
        term.coefficient = sol.coeffs[t];
        out.product.multiply(tree_constant_ratio(gnet.base, term.vertex, term.root, edge), term.coefficient);
        out.terms.push_back(term);
    }
    if (auto f = out.product.flatten()) out.flat = *f;
    return out;
}

}  // namespace crnt
