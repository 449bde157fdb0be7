#include "crnt/milp.hpp"

#include "simplex.hpp"

#include <algorithm>
#include <chrono>

namespace crnt {

namespace {

using detail::BoundedSimplex;
using LpResult = BoundedSimplex::Result;

Q floor_q(const Q& v) {
    Z f;
    mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return Q(f);
}

Q ceil_q(const Q& v) {
    Z f;
    mpz_cdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return Q(f);
}

struct State {
    BoundedSimplex lp;
    std::vector<bool> active;  // per model constraint
};

struct Incumbent {
    bool found = false;
    Q value;
    std::vector<Q> x;
};

class Solver {
public:
    Solver(const MilpModel& model, const MilpLimits& limits)
        : model_(model), limits_(limits), start_(std::chrono::steady_clock::now()) {
        std::size_t nv = model.variables.size();
        std::vector<bool> in_obj(nv, false);
        for (const auto& t : model.objective) in_obj[t.var] = true;
        for (std::size_t j = 0; j < nv; ++j)
            if (model.variables[j].kind == VarKind::Binary && in_obj[j]) branch_order_.push_back(j);
        for (std::size_t j = 0; j < nv; ++j)
            if (model.variables[j].kind == VarKind::Binary && !in_obj[j]) branch_order_.push_back(j);
        for (std::size_t j = 0; j < nv; ++j)
            if (model.variables[j].kind == VarKind::Integer) branch_order_.push_back(j);
    }

    // Builds the root LP: singleton rows become bounds, equality rows start active, inequalities are lazy.
    std::optional<State> root() {
        std::size_t nv = model_.variables.size();
        std::vector<std::optional<Q>> lo(nv), hi(nv);
        for (std::size_t j = 0; j < nv; ++j) {
            lo[j] = model_.variables[j].lower;
            hi[j] = model_.variables[j].upper;
            if (model_.variables[j].kind == VarKind::Binary) {
                lo[j] = lo[j] ? std::max<Q>(*lo[j], Q(0)) : Q(0);
                hi[j] = hi[j] ? std::min<Q>(*hi[j], Q(1)) : Q(1);
            }
        }
        std::vector<bool> singleton(model_.constraints.size(), false);
        for (std::size_t k = 0; k < model_.constraints.size(); ++k) {
            const auto& c = model_.constraints[k];
            std::size_t nz = 0;
            const LinearTerm* only = nullptr;
            for (const auto& t : c.terms)
                if (sgn(t.coeff) != 0) {
                    ++nz;
                    only = &t;
                }
            if (nz == 0) {
                singleton[k] = true;
                bool ok = c.rel == Relation::Equal ? sgn(c.rhs) == 0
                          : c.rel == Relation::LessEq ? sgn(c.rhs) >= 0
                                                      : sgn(c.rhs) <= 0;
                if (!ok) return std::nullopt;
                continue;
            }
            if (nz != 1) continue;
            singleton[k] = true;
            Q v = c.rhs / only->coeff;
            bool flips = sgn(only->coeff) < 0;
            bool upper = (c.rel == Relation::LessEq) != flips;
            if (c.rel == Relation::Equal || upper) hi[only->var] = hi[only->var] ? std::min<Q>(*hi[only->var], v) : v;
            if (c.rel == Relation::Equal || !upper) lo[only->var] = lo[only->var] ? std::max<Q>(*lo[only->var], v) : v;
        }
        std::vector<Q> l(nv), u(nv);
        for (std::size_t j = 0; j < nv; ++j) {
            if (!lo[j] || !hi[j]) throw MilpError("solver requires finite bounds on variable " + model_.variables[j].name);
            l[j] = *lo[j];
            u[j] = *hi[j];
            if (model_.variables[j].kind != VarKind::Continuous) {
                l[j] = ceil_q(l[j]);
                u[j] = floor_q(u[j]);
            }
            if (l[j] > u[j]) return std::nullopt;
        }
        State st{BoundedSimplex(l, u), std::vector<bool>(model_.constraints.size(), false)};
        for (std::size_t k = 0; k < model_.constraints.size(); ++k) {
            if (singleton[k]) {
                st.active[k] = true;
                continue;
            }
            if (model_.constraints[k].rel == Relation::Equal) activate(st, k);
        }
        return st;
    }

    void activate(State& st, std::size_t k) {
        const auto& c = model_.constraints[k];
        std::vector<std::pair<std::size_t, Q>> coeffs;
        for (const auto& t : c.terms) coeffs.emplace_back(t.var, t.coeff);
        std::optional<Q> lo, hi;
        if (c.rel != Relation::LessEq) lo = c.rhs;
        if (c.rel != Relation::GreaterEq) hi = c.rhs;
        st.lp.add_row(coeffs, lo, hi);
        st.active[k] = true;
    }

    std::size_t separate(State& st) {
        std::size_t added = 0;
        for (std::size_t k = 0; k < model_.constraints.size(); ++k) {
            if (st.active[k]) continue;
            const auto& c = model_.constraints[k];
            Q lhs = 0;
            for (const auto& t : c.terms) lhs += t.coeff * st.lp.value(t.var);
            bool ok = c.rel == Relation::Equal ? lhs == c.rhs : c.rel == Relation::LessEq ? lhs <= c.rhs : lhs >= c.rhs;
            if (!ok) {
                activate(st, k);
                ++added;
            }
        }
        return added;
    }

    LpResult solve_lp(State& st, bool primal_first) {
        LpResult r = primal_first ? st.lp.primal() : st.lp.dual();
        while (r == LpResult::Optimal) {
            if (separate(st) == 0) return r;
            r = st.lp.dual();
        }
        if (r == LpResult::IterationLimit) limit_hit_ = true;
        return r;
    }

    bool out_of_budget() {
        if (limit_hit_) return true;
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (nodes_ >= limits_.node_budget || elapsed > limits_.time_budget) limit_hit_ = true;
        return limit_hit_;
    }

    std::optional<std::size_t> fractional(const State& st) const {
        for (auto j : branch_order_)
            if (st.lp.value(j).get_den() != 1) return j;
        return std::nullopt;
    }

    std::vector<Q> values(const State& st) const {
        std::vector<Q> x(model_.variables.size());
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = st.lp.value(j);
        return x;
    }

    // Depth-first branch and bound on the current objective of st.
    void dfs(State st, bool integral_objective, Incumbent& best, const std::optional<Q>& floor_bound) {
        if (stop_ || out_of_budget()) return;
        ++nodes_;
        if (solve_lp(st, false) != LpResult::Optimal) return;
        Q obj = st.lp.objective();
        Q bound = integral_objective ? ceil_q(obj) : obj;
        if (best.found && bound >= best.value) return;
        auto j = fractional(st);
        if (!j) {
            best = {true, obj, values(st)};
            if (floor_bound && best.value <= *floor_bound) stop_ = true;
            return;
        }
        Q v = st.lp.value(*j);
        Q lo = st.lp.lower(*j), hi = st.lp.upper(*j);
        State down = st;
        down.lp.set_bounds(*j, lo, floor_q(v));
        dfs(std::move(down), integral_objective, best, floor_bound);
        if (stop_ || limit_hit_) return;
        st.lp.set_bounds(*j, ceil_q(v), hi);
        dfs(std::move(st), integral_objective, best, floor_bound);
    }

    // Minimizes the current objective of st over the integer points; st itself is left untouched.
    Incumbent minimize(const State& st, bool integral_objective) {
        Incumbent best;
        stop_ = false;
        State root = st;
        ++nodes_;
        if (solve_lp(root, false) != LpResult::Optimal) return best;
        Q lb = integral_objective ? ceil_q(root.lp.objective()) : root.lp.objective();
        if (!fractional(root)) return {true, root.lp.objective(), values(root)};
        dfs(std::move(root), integral_objective, best, lb);
        stop_ = false;
        return best;
    }

    MilpSolution run() {
        MilpSolution sol;
        auto st0 = root();
        if (!st0) {
            sol.status = MilpStatus::Infeasible;
            sol.message = "bounds are contradictory";
            return sol;
        }
        State st = std::move(*st0);
        std::size_t nv = model_.variables.size();
        std::vector<Q> c(nv, Q(0));
        bool integral = true;
        for (const auto& t : model_.objective) {
            c[t.var] += t.coeff;
            if (t.coeff.get_den() != 1 || model_.variables[t.var].kind == VarKind::Continuous) integral = false;
        }
        st.lp.set_objective(c);
        Incumbent first = minimize(st, integral);
        sol.nodes = nodes_;
        if (!first.found) {
            sol.status = limit_hit_ ? MilpStatus::Limit : MilpStatus::Infeasible;
            sol.message = limit_hit_ ? "budget exhausted before a feasible point was found" : "no feasible point";
            return sol;
        }
        auto finish = [&](const std::vector<Q>& x, MilpStatus status, const std::string& msg) {
            sol.status = status;
            sol.has_assignment = true;
            sol.values = x;
            sol.objective = 0;
            for (const auto& t : model_.objective) sol.objective += t.coeff * x[t.var];
            sol.translated.clear();
            for (const auto& info : model_.stoich_modes) sol.translated.push_back(x[info.sigma_var] == 0);
            sol.nodes = nodes_;
            sol.message = msg;
            auto bad = violations(model_, x);
            if (!bad.empty()) throw MilpError("internal inconsistency: solution violates " + bad.front());
            return sol;
        };
        if (limit_hit_) return finish(first.x, MilpStatus::Limit, "budget exhausted; incumbent not proven optimal");

        Q zstar = first.value;
        if (model_.tie_break_order.empty()) return finish(first.x, MilpStatus::Optimal, "");

        // Lexicographic tie-break among optimal points: fix the objective, then minimize each variable in turn.
        {
            std::vector<std::pair<std::size_t, Q>> orow;
            for (std::size_t j = 0; j < nv; ++j)
                if (sgn(c[j]) != 0) orow.emplace_back(j, c[j]);
            if (!orow.empty()) st.lp.add_row(orow, std::nullopt, zstar);
            st.lp.set_objective(c);
            if (solve_lp(st, false) != LpResult::Optimal)
                return finish(first.x, MilpStatus::Limit, "tie-break could not restore feasibility");
        }
        for (auto k : model_.tie_break_order) {
            std::vector<Q> ek(nv, Q(0));
            ek[k] = 1;
            st.lp.set_objective(ek);
            if (solve_lp(st, true) != LpResult::Optimal || out_of_budget())
                return finish(first.x, MilpStatus::Limit, "budget exhausted during tie-break");
            Incumbent best = minimize(st, model_.variables[k].kind != VarKind::Continuous);
            if (!best.found) return finish(first.x, MilpStatus::Limit, "budget exhausted during tie-break");
            Q v = best.x[k];
            st.lp.set_bounds(k, v, v);
            if (solve_lp(st, false) != LpResult::Optimal)
                return finish(first.x, MilpStatus::Limit, "tie-break lost feasibility");
        }
        st.lp.set_objective(std::vector<Q>(nv, Q(0)));
        Incumbent last = minimize(st, true);
        if (!last.found) return finish(first.x, MilpStatus::Limit, "budget exhausted completing the assignment");
        return finish(last.x, MilpStatus::Optimal, "");
    }

private:
    const MilpModel& model_;
    MilpLimits limits_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::size_t> branch_order_;
    std::size_t nodes_ = 0;
    bool limit_hit_ = false;
    bool stop_ = false;
};

}  // namespace

MilpSolution solve(const MilpModel& model, const MilpLimits& limits) {
    Solver s(model, limits);
    return s.run();
}

}  // namespace crnt
