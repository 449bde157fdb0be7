#include "crnt/numeric_oracle.hpp"

#include "crnt/exact_linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace crnt {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kLogFloor = -60.0;      // x below e^-60 counts as boundary attraction
constexpr double kConservationTol = 1e-12;
constexpr double kBalanceTol = 1e-9;
constexpr double kSpreadFloor = 1e-11;   // min x / max x below this is treated as a boundary point

class System {
public:
    System(const Network& net, const std::vector<double>& rates) : n_(net.n()), m_(net.m()) {
        if (rates.size() != m_) throw std::invalid_argument("rate vector has wrong length");
        for (double k : rates)
            if (!(k > 0)) throw std::invalid_argument("rates must be positive");
        logk_.resize(m_);
        for (std::size_t j = 0; j < m_; ++j) logk_[j] = std::log(rates[j]);
        auto mats = matrices(net);
        gamma_ = MatrixXd::Zero(n_, m_);
        ys_ = MatrixXd::Zero(n_, m_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < m_; ++j) {
                gamma_(i, j) = static_cast<double>(mats.Gamma(i, j));
                ys_(i, j) = static_cast<double>(net.source(j)[i]);
            }
        auto laws = conservation_laws(net);
        w_ = MatrixXd::Zero(laws.size(), n_);
        for (std::size_t k = 0; k < laws.size(); ++k)
            for (std::size_t i = 0; i < n_; ++i) w_(k, i) = laws[k][i];
        std::size_t s = n_ - laws.size();
        if (s > 0) {
            Eigen::ColPivHouseholderQR<MatrixXd> qr(gamma_);
            MatrixXd q = qr.householderQ() * MatrixXd::Identity(n_, s);
            qt_ = q.transpose();
        } else {
            qt_ = MatrixXd::Zero(0, n_);
        }
    }

    std::size_t n() const { return n_; }
    std::size_t laws() const { return static_cast<std::size_t>(w_.rows()); }
    const MatrixXd& w() const { return w_; }

    VectorXd flux(const VectorXd& u) const {
        VectorXd lv = ys_.transpose() * u;
        for (std::size_t j = 0; j < m_; ++j) lv(j) = std::exp(lv(j) + logk_[j]);
        return lv;
    }

    VectorXd rhs(const VectorXd& u) const { return gamma_ * flux(u); }

    // Largest |net rate| / (gross production + consumption) over species.
    double balance_error(const VectorXd& u) const {
        VectorXd v = flux(u);
        VectorXd net = gamma_ * v;
        VectorXd gross = gamma_.cwiseAbs() * v;
        double e = 0;
        for (Eigen::Index i = 0; i < net.size(); ++i)
            if (gross(i) > 0) e = std::max(e, std::abs(net(i)) / gross(i));
        return e;
    }

    double flux_scale(const VectorXd& u) const {
        VectorXd v = flux(u);
        return v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
    }

    void set_targets(const VectorXd& t) {
        t_ = t;
        tscale_ = VectorXd::Ones(t.size());
        for (Eigen::Index k = 0; k < t.size(); ++k)
            if (std::abs(t(k)) > 0) tscale_(k) = std::abs(t(k));
    }
    const VectorXd& targets() const { return t_; }

    // Square system in log coordinates: projected RHS (scaled by fs) and relative conservation residuals.
    void eval(const VectorXd& u, double fs, VectorXd& F, MatrixXd* J) const {
        VectorXd v = flux(u);
        VectorXd x = u.array().exp();
        std::size_t s = static_cast<std::size_t>(qt_.rows());
        F.resize(static_cast<Eigen::Index>(n_));
        F.head(s) = qt_ * (gamma_ * v) / fs;
        VectorXd c = w_ * x - t_;
        F.tail(laws()) = c.cwiseQuotient(tscale_);
        if (J) {
            J->resize(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_));
            J->topRows(s) = qt_ * gamma_ * v.asDiagonal() * ys_.transpose() / fs;
            J->bottomRows(laws()) = tscale_.cwiseInverse().asDiagonal() * w_ * x.asDiagonal();
        }
    }

    double conservation_error(const VectorXd& x) const {
        if (laws() == 0) return 0.0;
        VectorXd c = (w_ * x - t_).cwiseQuotient(tscale_);
        return c.cwiseAbs().maxCoeff();
    }

    // Jacobian of the RHS with respect to x.
    MatrixXd rhs_jacobian(const VectorXd& x) const {
        VectorXd u = x.array().log();
        VectorXd v = flux(u);
        return gamma_ * v.asDiagonal() * ys_.transpose() * x.cwiseInverse().asDiagonal();
    }

private:
    std::size_t n_, m_;
    std::vector<double> logk_;
    MatrixXd gamma_, ys_, w_, qt_;
    VectorXd t_, tscale_;
};

double inf_norm(const VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

bool finite(const VectorXd& v) { return v.allFinite(); }

enum class Outcome { Converged, Failed, Boundary };

struct Acceptance {
    double rhs_bound;  // 1e-10 (1 + ||RHS(initial)||)
};

bool accepted(const System& sys, const VectorXd& u, const Acceptance& acc, double& rhs_out) {
    VectorXd x = u.array().exp();
    double r = inf_norm(sys.rhs(u));
    rhs_out = r;
    double fs = sys.flux_scale(u);
    return r <= acc.rhs_bound && r <= 1e-11 * std::max(fs, std::numeric_limits<double>::min()) &&
           sys.balance_error(u) <= kBalanceTol && sys.conservation_error(x) <= kConservationTol &&
           (x.array() > 0).all() && x.minCoeff() >= kSpreadFloor * x.maxCoeff();
}

Outcome newton(const System& sys, VectorXd& u, const Acceptance& acc) {
    double fs = std::max(sys.flux_scale(u), 1e-300);
    VectorXd F, Ft;
    MatrixXd J;
    sys.eval(u, fs, F, &J);
    double merit = F.squaredNorm();
    for (int it = 0; it < 200; ++it) {
        VectorXd dx = J.colPivHouseholderQr().solve(-F);
        if (!finite(dx)) return Outcome::Failed;
        double cap = inf_norm(dx) > 2.0 ? 2.0 / inf_norm(dx) : 1.0;
        double t = cap;
        bool moved = false;
        VectorXd un;
        while (t > 1e-12) {
            un = u + t * dx;
            sys.eval(un, fs, Ft, nullptr);
            if (finite(Ft) && Ft.squaredNorm() < (1.0 - 1e-4 * t) * merit) {
                moved = true;
                break;
            }
            t *= 0.5;
        }
        if (!moved) break;
        u = un;
        if (u.minCoeff() < kLogFloor || u.minCoeff() - u.maxCoeff() < std::log(kSpreadFloor)) return Outcome::Boundary;
        sys.eval(u, fs, F, &J);
        merit = F.squaredNorm();
        if (inf_norm(t * dx) < 1e-15) break;
    }
    double r;
    return accepted(sys, u, acc, r) ? Outcome::Converged : Outcome::Failed;
}

// Moves log-state u onto the compatibility class W x = T by minimum-norm Gauss-Newton steps.
bool project_to_class(const System& sys, VectorXd& u) {
    if (sys.laws() == 0) return true;
    for (int it = 0; it < 100; ++it) {
        VectorXd x = u.array().exp();
        VectorXd r = sys.w() * x - sys.targets();
        if (sys.conservation_error(x) <= 1e-14) return true;
        MatrixXd J = sys.w() * x.asDiagonal();
        VectorXd du = J.completeOrthogonalDecomposition().solve(-r);
        if (!finite(du)) return false;
        double cap = inf_norm(du) > 1.0 ? 1.0 / inf_norm(du) : 1.0;
        double t = cap;
        double before = r.norm();
        while (t > 1e-12) {
            VectorXd un = u + t * du;
            VectorXd xn = un.array().exp();
            if ((sys.w() * xn - sys.targets()).norm() < before) {
                u = un;
                break;
            }
            t *= 0.5;
        }
        if (t <= 1e-12) return false;
    }
    return sys.conservation_error(u.array().exp()) <= 1e-12;
}

// Pseudo-transient continuation: implicit Euler steps with a growing step size, polished by Newton.
Outcome continuation(const System& sys, VectorXd& u, const Acceptance& acc) {
    VectorXd x = u.array().exp();
    std::size_t n = sys.n();
    double dt = 1e-3;
    int since_try = 0;
    for (int step = 0; step < 4000; ++step) {
        VectorXd y = x;
        bool ok = false;
        for (int it = 0; it < 12; ++it) {
            VectorXd g = y - x - dt * sys.rhs(y.array().log().matrix());
            if (inf_norm(g) <= 1e-13 * (1.0 + inf_norm(x))) {
                ok = true;
                break;
            }
            MatrixXd Jg = MatrixXd::Identity(n, n) - dt * sys.rhs_jacobian(y);
            VectorXd d = Jg.partialPivLu().solve(-g);
            if (!finite(d)) break;
            double t = 1.0;
            while (t > 1e-6 && ((y + t * d).array() <= 0).any()) t *= 0.5;
            if (((y + t * d).array() <= 0).any()) break;
            y += t * d;
        }
        if (!ok) {
            dt *= 0.25;
            if (dt < 1e-14) return Outcome::Failed;
            continue;
        }
        x = y;
        dt = std::min(dt * 2.0, 1e12);
        double scale = x.maxCoeff();
        if (x.minCoeff() < 1e-14 * scale && dt > 1e6) {
            u = x.array().log();
            return Outcome::Boundary;
        }
        VectorXd ux = x.array().log();
        double fs = std::max(sys.flux_scale(ux), 1e-300);
        double r = inf_norm(sys.rhs(ux));
        if (r < 1e-4 * fs || ++since_try >= 25) {
            since_try = 0;
            VectorXd trial = ux;
            auto o = newton(sys, trial, acc);
            if (o == Outcome::Converged) {
                u = trial;
                return o;
            }
        }
    }
    u = x.array().log();
    if (x.minCoeff() < 1e-12 * x.maxCoeff()) return Outcome::Boundary;
    return Outcome::Failed;
}

SteadyStateResult solve(const System& sys_in, VectorXd u0, std::uint64_t seed) {
    System sys = sys_in;
    SteadyStateResult res;
    res.conservation_targets.assign(sys.targets().data(), sys.targets().data() + sys.targets().size());
    std::mt19937_64 rng(seed);
    bool boundary = false;
    for (int attempt = 0; attempt < 4; ++attempt) {
        if (attempt > 0) {
            for (Eigen::Index i = 0; i < u0.size(); ++i) u0(i) = std::log(log_uniform(rng, 0.1, 10.0));
            if (sys.laws() > 0) {
                // rescale toward the class before projecting
                VectorXd x = u0.array().exp();
                VectorXd wx = sys.w() * x;
                double ratio = 1.0;
                for (Eigen::Index k = 0; k < wx.size(); ++k)
                    if (wx(k) > 0 && sys.targets()(k) > 0) ratio = sys.targets()(k) / wx(k);
                u0.array() += std::log(ratio);
            }
        }
        if (!project_to_class(sys, u0)) continue;
        Acceptance acc{1e-10 * (1.0 + inf_norm(sys.rhs(u0)))};
        if (attempt == 0) res.initial_residual = inf_norm(sys.rhs(u0));
        VectorXd u = u0;
        Outcome o = newton(sys, u, acc);
        std::string method = "newton";
        if (o != Outcome::Converged) {
            u = u0;
            o = continuation(sys, u, acc);
            method = "continuation";
        }
        if (o == Outcome::Converged) {
            VectorXd x = u.array().exp();
            res.state.assign(x.data(), x.data() + x.size());
            res.residual = inf_norm(sys.rhs(u));
            res.converged = true;
            res.boundary = false;
            res.method = method;
            return res;
        }
        if (o == Outcome::Boundary) {
            boundary = true;
            VectorXd x = u.array().exp();
            res.state.assign(x.data(), x.data() + x.size());
            res.residual = inf_norm(sys.rhs(u));
        }
    }
    res.boundary = boundary;
    return res;
}

double complex_log(const Complex& y, const std::vector<double>& x) {
    double s = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i]) s += static_cast<double>(y[i]) * std::log(x[i]);
    return s;
}

double eval_value(const FormalPowerProduct& f, const std::vector<double>& rates) {
    return f.eval([&](SymbolId s) {
        if (is_starred(s) || s >= rates.size()) throw std::invalid_argument("value refers to an unknown rate symbol");
        return rates[s];
    });
}

std::string pair_claim(const Network& net, const RobustPair& p) {
    return "x^(" + net.format_complex(p.y) + ")/x^(" + net.format_complex(p.y_prime) + ") = " + p.value->to_string();
}

}  // namespace

std::vector<std::vector<double>> conservation_laws(const Network& net) {
    auto mats = matrices(net);
    auto basis = left_kernel_basis(RationalMatrix(mats.Gamma));
    std::vector<std::vector<double>> out;
    for (const auto& w : basis) {
        std::vector<double> row;
        for (const auto& q : w) row.push_back(q.get_d());
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<double> mass_action_rhs(const Network& net, const std::vector<double>& rates, const std::vector<double>& x) {
    std::vector<double> f(net.n(), 0.0);
    for (std::size_t j = 0; j < net.m(); ++j) {
        double v = rates[j];
        const auto& y = net.source(j);
        for (std::size_t i = 0; i < net.n(); ++i)
            if (y[i]) v *= std::pow(x[i], static_cast<double>(y[i]));
        const auto& yp = net.product(j);
        for (std::size_t i = 0; i < net.n(); ++i) f[i] += static_cast<double>(yp[i] - y[i]) * v;
    }
    return f;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
    return std::exp(d(rng));
}

double relative_error(double value, double reference) {
    double denom = std::max(std::abs(reference), std::numeric_limits<double>::min());
    return std::abs(value - reference) / denom;
}

SteadyStateResult steady_state(const Network& net, const std::vector<double>& rates, const std::vector<double>& totals,
                               std::uint64_t seed) {
    System sys(net, rates);
    if (totals.size() != sys.laws()) throw std::invalid_argument("expected " + std::to_string(sys.laws()) + " conservation totals");
    VectorXd t(totals.size());
    for (std::size_t k = 0; k < totals.size(); ++k) t(static_cast<Eigen::Index>(k)) = totals[k];
    sys.set_targets(t);
    std::mt19937_64 rng(seed);
    VectorXd u0(net.n());
    for (std::size_t i = 0; i < net.n(); ++i) u0(static_cast<Eigen::Index>(i)) = std::log(log_uniform(rng, 0.1, 10.0));
    return solve(sys, u0, seed + 1);
}

SteadyStateResult steady_state_from(const Network& net, const std::vector<double>& rates, const std::vector<double>& x0,
                                    std::uint64_t seed) {
    System sys(net, rates);
    if (x0.size() != net.n()) throw std::invalid_argument("initial state has wrong length");
    VectorXd x(net.n());
    for (std::size_t i = 0; i < net.n(); ++i) {
        if (!(x0[i] > 0)) throw std::invalid_argument("initial state must be positive");
        x(static_cast<Eigen::Index>(i)) = x0[i];
    }
    sys.set_targets(sys.w() * x);
    return solve(sys, x.array().log(), seed + 1);
}

VerificationTable verify_claims(const Network& net, const RobustnessReport& report, unsigned trials, std::uint64_t seed,
                                double tol) {
    VerificationTable table;
    std::ostringstream sampling;
    sampling << "rates log-uniform in [1e-2, 1e2]; initial states log-uniform in [1e-1, 1e1] fix the conservation totals; "
             << trials << " trials, seed " << seed;
    table.sampling = sampling.str();

    struct Item {
        enum Kind { Pair, AcrValue, AcrInvariance } kind;
        std::size_t index;
    };
    std::vector<Item> items;
    for (std::size_t p = 0; p < report.pairs.size(); ++p)
        if (report.pairs[p].value) {
            items.push_back({Item::Pair, p});
            table.rows.push_back({pair_claim(net, report.pairs[p]), 0, 0, 0.0, ""});
        }
    for (std::size_t a = 0; a < report.acr.size(); ++a) {
        const auto& claim = report.acr[a];
        const std::string& name = net.species()[claim.species].name;
        if (claim.value) {
            items.push_back({Item::AcrValue, a});
            table.rows.push_back({"x_" + name + " = " + claim.value->to_string(), 0, 0, 0.0, ""});
        }
        items.push_back({Item::AcrInvariance, a});
        table.rows.push_back({"x_" + name + " invariant across totals", 0, 0, 0.0, ""});
    }
    if (items.empty()) return table;

    bool need_invariance = !report.acr.empty();
    for (unsigned t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, t);
        std::vector<double> rates(net.m());
        for (auto& k : rates) k = log_uniform(rng, 1e-2, 1e2);
        std::vector<std::vector<double>> starts(need_invariance ? 3 : 1, std::vector<double>(net.n()));
        for (auto& s : starts)
            for (auto& v : s) v = log_uniform(rng, 1e-1, 1e1);
        std::vector<SteadyStateResult> sols;
        for (std::size_t k = 0; k < starts.size(); ++k) sols.push_back(steady_state_from(net, rates, starts[k], seed ^ (t * 7919 + k)));
        for (std::size_t r = 0; r < items.size(); ++r) {
            auto& row = table.rows[r];
            ++row.trials;
            const auto& it = items[r];
            if (it.kind == Item::Pair) {
                if (!sols[0].converged) continue;
                ++row.converged;
                const auto& p = report.pairs[it.index];
                double numeric = std::exp(complex_log(net.complexes()[p.y], sols[0].state) -
                                          complex_log(net.complexes()[p.y_prime], sols[0].state));
                row.max_rel_err = std::max(row.max_rel_err, relative_error(numeric, eval_value(*p.value, rates)));
            } else if (it.kind == Item::AcrValue) {
                if (!sols[0].converged) continue;
                ++row.converged;
                const auto& c = report.acr[it.index];
                row.max_rel_err =
                    std::max(row.max_rel_err, relative_error(sols[0].state[c.species], eval_value(*c.value, rates)));
            } else {
                if (!std::all_of(sols.begin(), sols.end(), [](const auto& s) { return s.converged; })) continue;
                ++row.converged;
                std::size_t i = report.acr[it.index].species;
                for (std::size_t k = 1; k < sols.size(); ++k)
                    row.max_rel_err = std::max(row.max_rel_err, relative_error(sols[k].state[i], sols[0].state[i]));
            }
        }
    }
    for (auto& row : table.rows) row.verdict = row.converged == 0 ? "inconclusive" : row.max_rel_err <= tol ? "pass" : "fail";
    return table;
}

}  // namespace crnt
