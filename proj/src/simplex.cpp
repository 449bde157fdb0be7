#include "simplex.hpp"

#include <stdexcept>

namespace crnt::detail {

namespace {
constexpr std::size_t kIterationLimit = 500000;
constexpr std::size_t kBlandAfter = 2000;
}  // namespace

BoundedSimplex::BoundedSimplex(std::vector<Q> lower, std::vector<Q> upper) : nstruct_(lower.size()) {
    if (lower.size() != upper.size()) throw std::invalid_argument("bound vectors differ in length");
    for (std::size_t j = 0; j < nstruct_; ++j) {
        if (lower[j] > upper[j]) throw std::invalid_argument("empty bound interval");
        lo_.emplace_back(lower[j]);
        hi_.emplace_back(upper[j]);
        x_.push_back(lower[j]);
    }
    c_.assign(nstruct_, Q(0));
    d_.assign(nstruct_, Q(0));
    row_of_.assign(nstruct_, -1);
}

std::size_t BoundedSimplex::add_row(const std::vector<std::pair<std::size_t, Q>>& coeffs, std::optional<Q> lo,
                                    std::optional<Q> hi) {
    std::size_t N = lo_.size();
    for (auto& row : T_) row.emplace_back(0);
    std::vector<Q> row(N + 1, Q(0));
    Q val = 0, tmp;
    for (const auto& [k, a] : coeffs) {
        if (sgn(a) == 0) continue;
        val += a * x_[k];
        if (row_of_[k] < 0) {
            row[k] += a;
        } else {
            const auto& src = T_[static_cast<std::size_t>(row_of_[k])];
            for (std::size_t j = 0; j < N; ++j)
                if (sgn(src[j]) != 0) {
                    mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), src[j].get_mpq_t());
                    mpq_add(row[j].get_mpq_t(), row[j].get_mpq_t(), tmp.get_mpq_t());
                }
        }
    }
    T_.push_back(std::move(row));
    lo_.push_back(std::move(lo));
    hi_.push_back(std::move(hi));
    x_.push_back(val);
    c_.emplace_back(0);
    d_.emplace_back(0);
    row_of_.push_back(static_cast<long>(basis_.size()));
    basis_.push_back(N);
    return N;
}

void BoundedSimplex::set_objective(const std::vector<Q>& c) {
    std::size_t N = lo_.size();
    c_.assign(N, Q(0));
    for (std::size_t j = 0; j < c.size() && j < nstruct_; ++j) c_[j] = c[j];
    d_.assign(N, Q(0));
    Q tmp;
    for (std::size_t j = 0; j < N; ++j)
        if (row_of_[j] < 0) d_[j] = c_[j];
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const Q& cb = c_[basis_[r]];
        if (sgn(cb) == 0) continue;
        for (std::size_t j = 0; j < N; ++j)
            if (sgn(T_[r][j]) != 0) {
                mpq_mul(tmp.get_mpq_t(), cb.get_mpq_t(), T_[r][j].get_mpq_t());
                mpq_add(d_[j].get_mpq_t(), d_[j].get_mpq_t(), tmp.get_mpq_t());
            }
    }
}

void BoundedSimplex::move_nonbasic(std::size_t j, const Q& target) {
    Q delta = target - x_[j];
    if (sgn(delta) == 0) return;
    x_[j] = target;
    for (std::size_t r = 0; r < basis_.size(); ++r)
        if (sgn(T_[r][j]) != 0) x_[basis_[r]] += T_[r][j] * delta;
}

void BoundedSimplex::set_bounds(std::size_t var, const Q& lo, const Q& hi) {
    if (lo > hi) throw std::invalid_argument("empty bound interval");
    lo_[var] = lo;
    hi_[var] = hi;
    if (row_of_[var] >= 0) return;
    Q target;
    if (sgn(d_[var]) > 0)
        target = lo;
    else if (sgn(d_[var]) < 0)
        target = hi;
    else
        target = (x_[var] == hi) ? hi : lo;
    move_nonbasic(var, target);
}

void BoundedSimplex::pivot(std::size_t r, std::size_t q) {
    std::size_t p = basis_[r];
    std::size_t N = lo_.size();
    auto& R = T_[r];
    Q inv = 1 / R[q];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < N; ++j) {
        if (j == q || sgn(R[j]) == 0) continue;
        R[j] *= -inv;
        nz.push_back(j);
    }
    R[q] = 0;
    R[p] = inv;
    nz.push_back(p);
    Q tmp;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i == r) continue;
        auto& Ti = T_[i];
        if (sgn(Ti[q]) == 0) continue;
        Q beta = Ti[q];
        for (auto j : nz) {
            mpq_mul(tmp.get_mpq_t(), beta.get_mpq_t(), R[j].get_mpq_t());
            mpq_add(Ti[j].get_mpq_t(), Ti[j].get_mpq_t(), tmp.get_mpq_t());
        }
        Ti[q] = 0;
    }
    if (sgn(d_[q]) != 0) {
        Q delta = d_[q];
        for (auto j : nz) {
            mpq_mul(tmp.get_mpq_t(), delta.get_mpq_t(), R[j].get_mpq_t());
            mpq_add(d_[j].get_mpq_t(), d_[j].get_mpq_t(), tmp.get_mpq_t());
        }
        d_[q] = 0;
    }
    basis_[r] = q;
    row_of_[q] = static_cast<long>(r);
    row_of_[p] = -1;
    ++iterations_;
}

BoundedSimplex::Result BoundedSimplex::dual() {
    std::size_t N = lo_.size();
    std::size_t local = 0;
    while (true) {
        if (iterations_ > kIterationLimit) return Result::IterationLimit;
        bool bland = local++ > kBlandAfter;
        std::size_t leave = basis_.size();
        Q worst = 0;
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            std::size_t b = basis_[r];
            Q viol = 0;
            if (lo_[b] && x_[b] < *lo_[b])
                viol = *lo_[b] - x_[b];
            else if (hi_[b] && x_[b] > *hi_[b])
                viol = x_[b] - *hi_[b];
            if (sgn(viol) == 0) continue;
            if (leave == basis_.size() || (bland ? b < basis_[leave] : (viol > worst || (viol == worst && b < basis_[leave])))) {
                leave = r;
                worst = viol;
            }
        }
        if (leave == basis_.size()) return Result::Optimal;
        std::size_t b = basis_[leave];
        bool increase = lo_[b] && x_[b] < *lo_[b];
        Q target = increase ? *lo_[b] : *hi_[b];
        const auto& R = T_[leave];
        std::size_t enter = N;
        Q best;
        for (std::size_t j = 0; j < N; ++j) {
            if (row_of_[j] >= 0 || sgn(R[j]) == 0 || fixed(j)) continue;
            int s = sgn(R[j]);
            bool lowr = at_lower(j);
            bool ok = increase ? ((lowr && s > 0) || (!lowr && s < 0)) : ((lowr && s < 0) || (!lowr && s > 0));
            if (!ok) continue;
            Q ratio = abs(d_[j]) / abs(R[j]);
            if (enter == N || ratio < best) {
                enter = j;
                best = ratio;
            }
        }
        if (enter == N) return Result::Infeasible;
        Q step = (target - x_[b]) / R[enter];
        move_nonbasic(enter, x_[enter] + step);
        x_[b] = target;
        pivot(leave, enter);
    }
}

BoundedSimplex::Result BoundedSimplex::primal() {
    std::size_t N = lo_.size();
    while (true) {
        if (iterations_ > kIterationLimit) return Result::IterationLimit;
        std::size_t enter = N;
        for (std::size_t j = 0; j < N; ++j) {
            if (row_of_[j] >= 0 || fixed(j) || sgn(d_[j]) == 0) continue;
            if ((at_lower(j) && sgn(d_[j]) < 0) || (at_upper(j) && sgn(d_[j]) > 0)) {
                enter = j;
                break;
            }
        }
        if (enter == N) return Result::Optimal;
        int dir = (at_lower(enter) && sgn(d_[enter]) < 0) ? 1 : -1;
        std::optional<Q> flip;
        if (lo_[enter] && hi_[enter]) flip = *hi_[enter] - *lo_[enter];
        std::size_t leave = basis_.size();
        Q best;
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            const Q& a0 = T_[r][enter];
            if (sgn(a0) == 0) continue;
            std::size_t b = basis_[r];
            Q a = dir > 0 ? a0 : Q(-a0);
            Q t;
            if (sgn(a) > 0) {
                if (!hi_[b]) continue;
                t = (*hi_[b] - x_[b]) / a;
            } else {
                if (!lo_[b]) continue;
                t = (*lo_[b] - x_[b]) / a;
            }
            if (leave == basis_.size() || t < best || (t == best && b < basis_[leave])) {
                leave = r;
                best = t;
            }
        }
        if (flip && (leave == basis_.size() || *flip <= best)) {
            move_nonbasic(enter, dir > 0 ? *hi_[enter] : *lo_[enter]);
            ++iterations_;
            continue;
        }
        if (leave == basis_.size()) return Result::Unbounded;
        std::size_t b = basis_[leave];
        Q bound = sgn(T_[leave][enter]) * dir > 0 ? *hi_[b] : *lo_[b];
        move_nonbasic(enter, x_[enter] + dir * best);
        x_[b] = bound;
        pivot(leave, enter);
    }
}

Q BoundedSimplex::objective() const {
    Q z = 0;
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (sgn(c_[j]) != 0) z += c_[j] * x_[j];
    return z;
}

}  // namespace crnt::detail
