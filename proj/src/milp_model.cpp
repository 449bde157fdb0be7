#include "crnt/milp.hpp"

#include <algorithm>
#include <map>

namespace crnt {

const char* to_string(Family f) {
    switch (f) {
        case Family::React: return "React";
        case Family::PosT: return "PosT";
        case Family::PosC: return "PosC";
        case Family::Cycle: return "Cycle";
        case Family::Stoich: return "Stoich";
        case Family::Count: return "Count";
        case Family::Perm1: return "Perm1";
        case Family::Perm2: return "Perm2";
        case Family::Perm3: return "Perm3";
        case Family::Perm4: return "Perm4";
        case Family::Proper1: return "Proper1";
        case Family::Proper2: return "Proper2";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
    for (auto f : kAllFamilies)
        if (s == to_string(f)) return f;
    return std::nullopt;
}

const char* to_string(MilpStatus s) {
    switch (s) {
        case MilpStatus::Optimal: return "optimal";
        case MilpStatus::Infeasible: return "infeasible";
        case MilpStatus::Limit: return "limit";
    }
    return "?";
}

std::optional<std::size_t> MilpModel::find_variable(const std::string& name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i].name == name) return i;
    return std::nullopt;
}

std::size_t MilpModel::add_variable(const std::string& name, VarKind kind, std::optional<Q> lo, std::optional<Q> hi) {
    variables.push_back({name, kind, std::move(lo), std::move(hi)});
    return variables.size() - 1;
}

std::size_t MilpModel::count(Family f) const {
    return static_cast<std::size_t>(
        std::count_if(constraints.begin(), constraints.end(), [f](const Constraint& c) { return c.family == f; }));
}

IntMatrix cycle_shifts(const Network& net, const std::vector<std::size_t>& order) {
    std::size_t n = net.n(), k = order.size();
    IntMatrix u(n, k);
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t v = 0;
            for (std::size_t s = 0; s < t; ++s) v += net.product(order[s])[i];
            for (std::size_t s = t + 1; s < k; ++s) v += net.source(order[s])[i];
            u(i, t) = v;
        }
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t lo = u(i, 0);
        for (std::size_t t = 1; t < k; ++t) lo = std::min(lo, u(i, t));
        for (std::size_t t = 0; t < k; ++t) u(i, t) -= lo;
    }
    return u;
}

namespace {

class Builder {
public:
    explicit Builder(MilpModel& m) : model_(m) {}

    void add(Family f, std::vector<LinearTerm> terms, Relation rel, Q rhs) {
        std::size_t idx = counters_[f]++;
        model_.constraints.push_back(
            {std::string(to_string(f)) + "_" + std::to_string(idx), std::move(terms), rel, std::move(rhs), f});
    }

private:
    MilpModel& model_;
    std::map<Family, std::size_t> counters_;
};

}  // namespace

MilpModel build_model(const Network& net, const std::vector<ElementaryMode>& modes, const MilpOptions& opts) {
    MilpModel model;
    auto mats = matrices(net);
    std::size_t n = net.n(), m = net.m();
    model.n = n;
    model.m = m;
    model.gamma_minus = mats.GammaMinus;
    model.gamma_plus = mats.GammaPlus;
    for (const auto& r : net.reactions()) model.reaction_sources.push_back(r.source);

    std::int64_t total = 0, max_gamma = 0;
    for (std::size_t k = 0; k < mats.GammaMinus.data.size(); ++k) {
        total += mats.GammaMinus.data[k] + mats.GammaPlus.data[k];
        max_gamma = std::max({max_gamma, mats.GammaMinus.data[k], mats.GammaPlus.data[k]});
    }
    std::int64_t B = opts.bound ? *opts.bound : total;
    if (B < 0) throw MilpError("translation bound must be nonnegative");
    model.bound = B;

    std::vector<std::size_t> stoich;
    for (std::size_t h = 0; h < modes.size(); ++h) {
        if (modes[h].kind == ModeKind::Cyclic) {
            model.cyclic_modes.push_back(h);
        } else if (!modes[h].unit_support) {
            model.skipped_modes.push_back(h);
            std::string s;
            for (auto j : modes[h].support) s += (s.empty() ? "" : ",") + net.reactions()[j].label;
            model.warnings.push_back("stoichiometric mode {" + s + "} has non-unit flux entries and is not encoded");
        } else {
            stoich.push_back(h);
        }
    }

    std::int64_t beff = std::max<std::int64_t>({B, max_gamma, 1});
    std::vector<IntMatrix> fixed;
    if (!opts.permutations)
        for (auto h : stoich) {
            fixed.push_back(cycle_shifts(net, modes[h].support));
            for (auto v : fixed.back().data) beff = std::max<std::int64_t>(beff, std::llabs(v));
        }
    Z K = Z(4) * beff * static_cast<long>(n);  // 1/epsilon
    model.epsilon = Q(1) / Q(K);
    model.big_m = Q(K + 1);
    Q KQ(K), KM = Q(K) * model.big_m;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            model.ups_vars.push_back(model.add_variable("ups_" + std::to_string(i) + "_" + std::to_string(j),
                                                        VarKind::Integer, Q(-B), Q(B)));
    auto ups = [&](std::size_t i, std::size_t j) { return model.ups_vars[i * m + j]; };

    for (std::size_t s = 0; s < stoich.size(); ++s) {
        StoichModeInfo info;
        info.mode_index = stoich[s];
        info.support = modes[stoich[s]].support;
        std::size_t k = info.support.size();
        if (opts.permutations) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t t = 0; t < k; ++t)
                    info.uhat_vars.push_back(model.add_variable(
                        "uhat_" + std::to_string(s) + "_" + std::to_string(i) + "_" + std::to_string(t),
                        VarKind::Integer, Q(-B), Q(B)));
            for (std::size_t t = 0; t < k; ++t)
                for (std::size_t j = 0; j < k; ++j)
                    info.perm_vars.push_back(model.add_variable(
                        "P_" + std::to_string(s) + "_" + std::to_string(t) + "_" + std::to_string(j), VarKind::Binary,
                        Q(0), Q(1)));
        } else {
            info.uhat = fixed[s];
        }
        model.stoich_modes.push_back(std::move(info));
    }
    for (std::size_t s = 0; s < stoich.size(); ++s)
        model.stoich_modes[s].sigma_var =
            model.add_variable("sigma_" + std::to_string(s), VarKind::Binary, Q(0), Q(1));

    // Proper translations: one representative reaction per distinct source complex.
    std::vector<std::size_t> reps;
    if (opts.proper) {
        std::vector<std::size_t> seen;
        for (std::size_t j = 0; j < m; ++j)
            if (std::find(seen.begin(), seen.end(), net.reactions()[j].source) == seen.end()) {
                seen.push_back(net.reactions()[j].source);
                reps.push_back(j);
            }
    }
    struct PairVars {
        std::size_t a, b;
        std::vector<std::size_t> U, V;
    };
    std::vector<PairVars> pairs;
    for (std::size_t x = 0; x < reps.size(); ++x)
        for (std::size_t y = x + 1; y < reps.size(); ++y) {
            PairVars pv{reps[x], reps[y], {}, {}};
            std::string suffix = std::to_string(reps[x]) + "_" + std::to_string(reps[y]);
            for (std::size_t i = 0; i < n; ++i)
                pv.U.push_back(model.add_variable("U_" + std::to_string(i) + "_" + suffix, VarKind::Binary, Q(0), Q(1)));
            for (std::size_t i = 0; i < n; ++i)
                pv.V.push_back(model.add_variable("V_" + std::to_string(i) + "_" + suffix, VarKind::Binary, Q(0), Q(1)));
            pairs.push_back(std::move(pv));
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) model.tie_break_order.push_back(ups(i, j));
    for (const auto& info : model.stoich_modes)
        for (auto v : info.perm_vars) model.tie_break_order.push_back(v);
    for (const auto& info : model.stoich_modes) model.tie_break_order.push_back(info.sigma_var);

    for (const auto& info : model.stoich_modes) model.objective.push_back({info.sigma_var, Q(1)});

    Builder b(model);
    for (std::size_t j1 = 0; j1 < m; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < m; ++j2)
            if (net.reactions()[j1].source == net.reactions()[j2].source)
                for (std::size_t i = 0; i < n; ++i)
                    b.add(Family::React, {{ups(i, j1), Q(1)}, {ups(i, j2), Q(-1)}}, Relation::Equal, Q(0));

    if (opts.positive_translations)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) b.add(Family::PosT, {{ups(i, j), Q(1)}}, Relation::GreaterEq, Q(0));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            b.add(Family::PosC, {{ups(i, j), Q(1)}}, Relation::GreaterEq, Q(-mats.GammaMinus(i, j)));
            b.add(Family::PosC, {{ups(i, j), Q(1)}}, Relation::GreaterEq, Q(-mats.GammaPlus(i, j)));
        }

    for (auto h : model.cyclic_modes) {
        const auto& sup = modes[h].support;
        for (std::size_t t = 0; t + 1 < sup.size(); ++t)
            for (std::size_t i = 0; i < n; ++i)
                b.add(Family::Cycle, {{ups(i, sup[t]), Q(1)}, {ups(i, sup[t + 1]), Q(-1)}}, Relation::Equal, Q(0));
    }

    for (const auto& info : model.stoich_modes) {
        std::size_t k = info.support.size();
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t c = 0; c < k; ++c) {
                if (a == c) continue;
                for (std::size_t i = 0; i < n; ++i) {
                    // sigma >= eps (ups_a - uhat_a - ups_c + uhat_c), scaled by 1/eps.
                    std::vector<LinearTerm> t = {{info.sigma_var, KQ},
                                                 {ups(i, info.support[a]), Q(-1)},
                                                 {ups(i, info.support[c]), Q(1)}};
                    Q rhs = 0;
                    if (info.uhat) {
                        rhs = Q((*info.uhat)(i, c) - (*info.uhat)(i, a));
                    } else {
                        t.push_back({info.uhat_vars[i * k + a], Q(1)});
                        t.push_back({info.uhat_vars[i * k + c], Q(-1)});
                    }
                    b.add(Family::Count, std::move(t), Relation::GreaterEq, rhs);
                }
            }
    }

    if (opts.permutations) {
        for (const auto& info : model.stoich_modes) {
            std::size_t k = info.support.size();
            auto P = [&](std::size_t t, std::size_t j) { return info.perm_vars[t * k + j]; };
            for (std::size_t t = 0; t < k; ++t) {
                std::vector<LinearTerm> row;
                for (std::size_t j = 0; j < k; ++j) row.push_back({P(t, j), Q(1)});
                b.add(Family::Perm1, row, Relation::Equal, Q(1));
            }
            for (std::size_t j = 0; j < k; ++j) {
                std::vector<LinearTerm> row;
                for (std::size_t t = 0; t < k; ++t) row.push_back({P(t, j), Q(1)});
                b.add(Family::Perm2, row, Relation::Equal, Q(1));
            }
            for (std::size_t t = 0; t < k; ++t) {
                std::size_t tn = (t + 1) % k;
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t c = 0; c < k; ++c) {
                        if (a == c) continue;
                        std::size_t j1 = info.support[a], j2 = info.support[c];
                        for (std::size_t i = 0; i < n; ++i) {
                            Q g = Q(mats.GammaPlus(i, j1) - mats.GammaMinus(i, j2));
                            auto ua = info.uhat_vars[i * k + a], uc = info.uhat_vars[i * k + c];
                            b.add(Family::Perm3, {{ua, Q(1)}, {uc, Q(-1)}, {P(t, a), KQ}, {P(tn, c), KQ}},
                                  Relation::LessEq, 2 * KQ - g);
                            b.add(Family::Perm3, {{ua, Q(1)}, {uc, Q(-1)}, {P(t, a), -KQ}, {P(tn, c), -KQ}},
                                  Relation::GreaterEq, -2 * KQ - g);
                        }
                    }
            }
            b.add(Family::Perm4, {{P(0, 0), Q(1)}}, Relation::Equal, Q(1));
        }
    }

    for (const auto& pv : pairs) {
        for (std::size_t i = 0; i < n; ++i) {
            Q dg = Q(mats.GammaMinus(i, pv.a) - mats.GammaMinus(i, pv.b));
            // K*D >= 1 - U - K*M*V and K*D <= -1 + U + K*M*(1 - V), with D the translated source difference.
            b.add(Family::Proper1, {{ups(i, pv.a), KQ}, {ups(i, pv.b), -KQ}, {pv.U[i], Q(1)}, {pv.V[i], KM}},
                  Relation::GreaterEq, Q(1) - KQ * dg);
            b.add(Family::Proper1, {{ups(i, pv.a), KQ}, {ups(i, pv.b), -KQ}, {pv.U[i], Q(-1)}, {pv.V[i], KM}},
                  Relation::LessEq, Q(-1) + KM - KQ * dg);
        }
        std::vector<LinearTerm> row;
        for (auto u : pv.U) row.push_back({u, Q(1)});
        b.add(Family::Proper2, row, Relation::LessEq, Q(static_cast<long>(n) - 1));
    }
    return model;
}

std::vector<std::string> violations(const MilpModel& model, const std::vector<Q>& values) {
    std::vector<std::string> out;
    if (values.size() != model.variables.size()) return {"assignment has wrong length"};
    for (std::size_t v = 0; v < values.size(); ++v) {
        const auto& var = model.variables[v];
        if ((var.lower && values[v] < *var.lower) || (var.upper && values[v] > *var.upper))
            out.push_back("bound:" + var.name);
        if (var.kind != VarKind::Continuous && values[v].get_den() != 1) out.push_back("integrality:" + var.name);
    }
    for (const auto& c : model.constraints) {
        Q lhs = 0;
        for (const auto& t : c.terms) lhs += t.coeff * values[t.var];
        bool ok = c.rel == Relation::Equal ? lhs == c.rhs : c.rel == Relation::LessEq ? lhs <= c.rhs : lhs >= c.rhs;
        if (!ok) out.push_back(c.name);
    }
    return out;
}

ExtractedScheme extract_scheme(const MilpSolution& sol, const MilpModel& model) {
    if (!sol.has_assignment) throw MilpError("no assignment to extract a scheme from");
    if (model.ups_vars.size() != model.n * model.m) throw MilpError("model carries no translation variables");
    auto bad = violations(model, sol.values);
    if (!bad.empty()) throw MilpError("internal inconsistency: assignment violates " + bad.front());
    ExtractedScheme out;
    out.scheme.shifts = IntMatrix(model.n, model.m);
    for (std::size_t i = 0; i < model.n; ++i)
        for (std::size_t j = 0; j < model.m; ++j) {
            const Q& v = sol.values[model.ups_vars[i * model.m + j]];
            out.scheme.shifts(i, j) = v.get_num().get_si();
        }
    for (std::size_t j = 0; j < model.m; ++j)
        for (std::size_t i = 0; i < model.n; ++i) {
            auto u = out.scheme.shifts(i, j);
            if (u + model.gamma_minus(i, j) < 0 || u + model.gamma_plus(i, j) < 0)
                throw MilpError("internal inconsistency: extracted scheme violates PosC");
        }
    for (std::size_t a = 0; a < model.m; ++a)
        for (std::size_t b = a + 1; b < model.m; ++b)
            if (model.reaction_sources[a] == model.reaction_sources[b] &&
                out.scheme.shifts.column(a) != out.scheme.shifts.column(b))
                throw MilpError("internal inconsistency: extracted scheme violates React");
    for (const auto& info : model.stoich_modes)
        if (sol.values[info.sigma_var] != 0) out.untranslated_modes.push_back(info.mode_index);
    return out;
}

}  // namespace crnt
