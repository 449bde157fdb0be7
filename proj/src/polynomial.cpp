#include "crnt/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace crnt {

std::string symbol_name(SymbolId s) {
    if (is_starred(s)) return "k" + std::to_string(s - kStarOffset + 1) + "*";
    return "k" + std::to_string(s + 1);
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& f : factors) d += f.second;
    return d;
}

std::uint32_t Monomial::exponent(SymbolId s) const {
    for (const auto& f : factors)
        if (f.first == s) return f.second;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < factors.size() || j < o.factors.size()) {
        if (j == o.factors.size() || (i < factors.size() && factors[i].first < o.factors[j].first)) {
            r.factors.push_back(factors[i++]);
        } else if (i == factors.size() || o.factors[j].first < factors[i].first) {
            r.factors.push_back(o.factors[j++]);
        } else {
            r.factors.emplace_back(factors[i].first, factors[i].second + o.factors[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& f : factors)
        if (o.exponent(f.first) < f.second) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
    Monomial r;
    for (const auto& f : factors) {
        auto e = f.second - o.exponent(f.first);
        if (e > 0) r.factors.emplace_back(f.first, e);
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (const auto& f : a.factors) {
        auto e = std::min(f.second, b.exponent(f.first));
        if (e > 0) r.factors.emplace_back(f.first, e);
    }
    return r;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        SymbolId sa = i < a.factors.size() ? a.factors[i].first : UINT32_MAX;
        SymbolId sb = j < b.factors.size() ? b.factors[j].first : UINT32_MAX;
        SymbolId s = std::min(sa, sb);
        std::uint32_t ea = sa == s ? a.factors[i].second : 0;
        std::uint32_t eb = sb == s ? b.factors[j].second : 0;
        if (ea != eb) return ea > eb;
        if (sa == s) ++i;
        if (sb == s) ++j;
    }
    return false;
}

Polynomial::Polynomial(long c) {
    if (c != 0) terms_[Monomial{}] = Z(c);
}

Polynomial::Polynomial(const Z& c) {
    if (sgn(c) != 0) terms_[Monomial{}] = c;
}

Polynomial Polynomial::variable(SymbolId s) { return term(Z(1), Monomial{{{s, 1}}}); }

Polynomial Polynomial::term(const Z& c, const Monomial& m) {
    Polynomial p;
    if (sgn(c) != 0) p.terms_[m] = c;
    return p;
}

void Polynomial::add_term(const Monomial& m, const Z& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.factors.empty()); }

Z Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.begin()->second;
}

std::uint32_t Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

std::uint32_t Polynomial::degree(SymbolId s) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
    return d;
}

std::set<SymbolId> Polynomial::symbols() const {
    std::set<SymbolId> out;
    for (const auto& [m, c] : terms_)
        for (const auto& f : m.factors) out.insert(f.first);
    return out;
}

bool Polynomial::all_coefficients_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return sgn(t.second) > 0; });
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1), base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial q, r = *this;
    const auto& lm = d.leading_monomial();
    const auto& lc = d.leading_coefficient();
    while (!r.is_zero()) {
        const auto& rm = r.leading_monomial();
        const auto& rc = r.leading_coefficient();
        if (!lm.divides(rm) || !mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
        Z c = rc / lc;
        Polynomial t = term(c, rm.quotient(lm));
        q += t;
        r = r - t * d;
    }
    return q;
}

Z Polynomial::integer_content() const {
    Z g = 0;
    for (const auto& [m, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return {};
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_) g = Monomial::gcd(g, m);
    return g;
}

Polynomial Polynomial::divide_monomial(const Monomial& mono) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (!mono.divides(m)) throw std::domain_error("monomial does not divide polynomial");
        r.terms_.emplace(m.quotient(mono), c);
    }
    return r;
}

Polynomial Polynomial::divide_integer(const Z& d) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) throw std::domain_error("integer does not divide polynomial");
        r.terms_.emplace(m, c / d);
    }
    return r;
}

std::map<std::uint32_t, Polynomial> Polynomial::coefficients_in(SymbolId s) const {
    std::map<std::uint32_t, Polynomial> out;
    for (const auto& [m, c] : terms_) {
        Monomial rest;
        std::uint32_t e = 0;
        for (const auto& f : m.factors) {
            if (f.first == s)
                e = f.second;
            else
                rest.factors.push_back(f);
        }
        out[e].add_term(rest, c);
    }
    return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1u) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1u;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero");
    return powmod(a, p - 2, p);
}

namespace {
std::uint64_t reduce(const Z& c, std::uint64_t p) {
    Z r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    return r.get_ui();
}
}  // namespace

std::uint64_t Polynomial::eval_mod(const std::function<std::uint64_t(SymbolId)>& value, std::uint64_t p) const {
    std::uint64_t acc = 0;
    for (const auto& [m, c] : terms_) {
        std::uint64_t t = reduce(c, p);
        for (const auto& f : m.factors) t = mulmod(t, powmod(value(f.first), f.second, p), p);
        acc += t;
        if (acc >= p) acc -= p;
    }
    return acc;
}

double Polynomial::eval(const std::function<double(SymbolId)>& value) const {
    double acc = 0;
    for (const auto& [m, c] : terms_) {
        double t = c.get_d();
        for (const auto& f : m.factors) t *= std::pow(value(f.first), static_cast<double>(f.second));
        acc += t;
    }
    return acc;
}

RationalFunction Polynomial::substitute(SymbolId s, const RationalFunction& r) const {
    RationalFunction acc(0);
    for (const auto& [e, coeff] : coefficients_in(s)) acc = acc + RationalFunction(coeff) * r.pow(static_cast<long>(e));
    return acc;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Z a = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (const auto& f : m.factors) {
            if (!mono.empty()) mono += "*";
            mono += symbol_name(f.first);
            if (f.second > 1) mono += "^" + std::to_string(f.second);
        }
        if (mono.empty())
            out += a.get_str();
        else if (a == 1)
            out += mono;
        else
            out += a.get_str() + "*" + mono;
    }
    return out;
}

namespace {

Polynomial positive_leading(const Polynomial& p) { return (!p.is_zero() && sgn(p.leading_coefficient()) < 0) ? -p : p; }

Polynomial exact(const Polynomial& a, const Polynomial& b) {
    auto q = a.divide_exact(b);
    if (!q) throw std::logic_error("expected exact polynomial division");
    return *q;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& p, SymbolId x) {
    Polynomial g;
    for (const auto& [e, c] : p.coefficients_in(x)) {
        g = g.is_zero() ? positive_leading(c) : gcd_rec(g, c);
        if (g.is_constant() && g.constant_value() == 1) break;
    }
    return g;
}

Polynomial prem(const Polynomial& a, const Polynomial& b, SymbolId x) {
    auto db = b.degree(x);
    Polynomial lcb = b.coefficients_in(x).rbegin()->second;
    Polynomial r = a;
    while (!r.is_zero() && r.degree(x) >= db) {
        auto cr = r.coefficients_in(x);
        auto dr = cr.rbegin()->first;
        Polynomial shift = Polynomial::term(Z(1), dr - db > 0 ? Monomial{{{x, dr - db}}} : Monomial{});
        r = lcb * r - cr.rbegin()->second * shift * b;
    }
    return r;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return positive_leading(b);
    if (b.is_zero()) return positive_leading(a);
    if (a.is_constant() || b.is_constant()) {
        Z g;
        mpz_gcd(g.get_mpz_t(), a.integer_content().get_mpz_t(), b.integer_content().get_mpz_t());
        return Polynomial(g);
    }
    auto sa = a.symbols(), sb = b.symbols();
    SymbolId x = std::min(*sa.begin(), *sb.begin());
    if (a.degree(x) == 0) return gcd_rec(a, content_in(b, x));
    if (b.degree(x) == 0) return gcd_rec(content_in(a, x), b);
    Polynomial ca = content_in(a, x), cb = content_in(b, x);
    Polynomial pa = exact(a, ca), pb = exact(b, cb);
    Polynomial c = gcd_rec(ca, cb);
    if (pa.degree(x) < pb.degree(x)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Polynomial r = prem(pa, pb, x);
        pa = pb;
        if (r.is_zero()) {
            pb = Polynomial();
        } else if (r.degree(x) == 0) {
            pa = Polynomial(1);
            pb = Polynomial();
        } else {
            pb = exact(r, content_in(r, x));
        }
    }
    if (!pa.is_constant()) pa = exact(pa, content_in(pa, x));
    return positive_leading(c * positive_leading(pa));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return positive_leading(b);
    if (b.is_zero()) return positive_leading(a);
    Monomial mg = Monomial::gcd(a.monomial_content(), b.monomial_content());
    Z ig;
    mpz_gcd(ig.get_mpz_t(), a.integer_content().get_mpz_t(), b.integer_content().get_mpz_t());
    Polynomial pa = a.divide_monomial(a.monomial_content()).divide_integer(a.integer_content());
    Polynomial pb = b.divide_monomial(b.monomial_content()).divide_integer(b.integer_content());
    Polynomial g = positive_leading(gcd_rec(pa, pb));
    g = g.divide_integer(g.integer_content());
    return Polynomial::term(ig, mg) * g;
}

RationalFunction::RationalFunction(const Polynomial& n, const Polynomial& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    Monomial mg = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
    if (!mg.factors.empty()) {
        num_ = num_.divide_monomial(mg);
        den_ = den_.divide_monomial(mg);
    }
    Z ig;
    mpz_gcd(ig.get_mpz_t(), num_.integer_content().get_mpz_t(), den_.integer_content().get_mpz_t());
    if (ig != 1) {
        num_ = num_.divide_integer(ig);
        den_ = den_.divide_integer(ig);
    }
    if (sgn(den_.leading_coefficient()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_.size() == 1 && num_.size() > 0) {
        // A monomial denominator divides out whenever it divides the numerator.
        if (auto q = num_.divide_exact(den_)) {
            num_ = *q;
            den_ = Polynomial(1);
        }
    }
}

bool RationalFunction::is_one() const { return num_ == den_; }

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + RationalFunction(-o.num_, o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::inverse() const {
    if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RationalFunction RationalFunction::simplified() const {
    Polynomial g = gcd(num_, den_);
    if (g.is_constant()) return *this;
    return RationalFunction(exact(num_, g), exact(den_, g));
}

bool RationalFunction::equals(const RationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }

std::set<SymbolId> RationalFunction::symbols() const {
    auto s = num_.symbols();
    auto d = den_.symbols();
    s.insert(d.begin(), d.end());
    return s;
}

double RationalFunction::eval(const std::function<double(SymbolId)>& value) const {
    return num_.eval(value) / den_.eval(value);
}

RationalFunction RationalFunction::substitute(SymbolId s, const RationalFunction& r) const {
    return num_.substitute(s, r) / den_.substitute(s, r);
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
    std::string n = num_.size() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
    bool bare = den_.size() == 1 && den_.leading_coefficient() == 1 && den_.leading_monomial().factors.size() == 1 &&
                den_.leading_monomial().factors[0].second == 1;
    bare = bare || den_.is_constant();
    std::string d = bare ? den_.to_string() : "(" + den_.to_string() + ")";
    return n + "/" + d;
}

FormalPowerProduct::FormalPowerProduct(const RationalFunction& r) { multiply(r, Q(1)); }

void FormalPowerProduct::multiply(const RationalFunction& base, const Q& exponent) {
    if (sgn(exponent) == 0 || base.is_one()) return;
    if (base.is_zero()) throw std::domain_error("zero base in power product");
    for (auto it = factors_.begin(); it != factors_.end(); ++it) {
        if (it->base.equals(base)) {
            it->exponent += exponent;
            if (sgn(it->exponent) == 0) factors_.erase(it);
            return;
        }
    }
    factors_.push_back({base, exponent});
}

FormalPowerProduct FormalPowerProduct::operator*(const FormalPowerProduct& o) const {
    FormalPowerProduct r = *this;
    for (const auto& f : o.factors_) r.multiply(f.base, f.exponent);
    return r;
}

FormalPowerProduct FormalPowerProduct::pow(const Q& e) const {
    FormalPowerProduct r;
    for (const auto& f : factors_) r.multiply(f.base, f.exponent * e);
    return r;
}

bool FormalPowerProduct::integer_exponents() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const PowerFactor& f) { return f.exponent.get_den() == 1; });
}

Z FormalPowerProduct::exponent_lcm() const {
    Z l = 1;
    for (const auto& f : factors_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f.exponent.get_den_mpz_t());
    return l;
}

std::optional<RationalFunction> FormalPowerProduct::flatten() const {
    if (!integer_exponents()) return std::nullopt;
    RationalFunction acc(1);
    for (const auto& f : factors_) {
        if (!f.exponent.get_num().fits_slong_p()) throw std::overflow_error("exponent too large");
        acc = acc * f.base.pow(f.exponent.get_num().get_si());
    }
    return acc;
}

std::set<SymbolId> FormalPowerProduct::symbols() const {
    std::set<SymbolId> s;
    for (const auto& f : factors_) {
        auto t = f.base.symbols();
        s.insert(t.begin(), t.end());
    }
    return s;
}

std::uint32_t FormalPowerProduct::total_degree() const {
    Z l = exponent_lcm();
    Z d = 0;
    for (const auto& f : factors_) {
        Q e = abs(f.exponent) * l;
        d += e.get_num() * f.base.total_degree();
    }
    return d.fits_ulong_p() ? static_cast<std::uint32_t>(d.get_ui()) : UINT32_MAX;
}

double FormalPowerProduct::eval(const std::function<double(SymbolId)>& value) const {
    double acc = 1.0;
    for (const auto& f : factors_) acc *= std::pow(f.base.eval(value), f.exponent.get_d());
    return acc;
}

FormalPowerProduct FormalPowerProduct::substitute(SymbolId s, const RationalFunction& r) const {
    FormalPowerProduct out;
    for (const auto& f : factors_) out.multiply(f.base.substitute(s, r), f.exponent);
    return out;
}

std::string FormalPowerProduct::to_string() const {
    if (factors_.empty()) return "1";
    if (auto flat = flatten(); flat && factors_.size() == 1 && factors_[0].exponent == 1) return flat->to_string();
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) out += " * ";
        out += "(" + f.base.to_string() + ")";
        if (f.exponent != 1) out += "^(" + f.exponent.get_str() + ")";
    }
    return out;
}

namespace {

// Numerator and denominator of a power product raised to an integer multiple that clears exponent denominators.
struct FieldValue {
    std::uint64_t num = 1;
    std::uint64_t den = 1;
};

FieldValue field_eval(const RationalFunction& f, const std::function<std::uint64_t(SymbolId)>& v) {
    return {f.numerator().eval_mod(v, kFieldPrime), f.denominator().eval_mod(v, kFieldPrime)};
}

FieldValue field_eval(const FormalPowerProduct& f, const std::function<std::uint64_t(SymbolId)>& v) {
    Z l = f.exponent_lcm();
    FieldValue acc;
    for (const auto& fac : f.factors()) {
        Q e = fac.exponent * l;
        Z en = e.get_num();
        auto n = fac.base.numerator().eval_mod(v, kFieldPrime);
        auto d = fac.base.denominator().eval_mod(v, kFieldPrime);
        if (sgn(en) < 0) {
            std::swap(n, d);
            en = -en;
        }
        std::uint64_t k = en.get_ui();
        acc.num = mulmod(acc.num, powmod(n, k, kFieldPrime), kFieldPrime);
        acc.den = mulmod(acc.den, powmod(d, k, kFieldPrime), kFieldPrime);
    }
    return acc;
}

template <class F>
DependenceTest run_dependence(const F& f, SymbolId s, unsigned trials, std::uint64_t seed) {
    if (trials < 20) trials = 20;
    DependenceTest out;
    out.trials = trials;
    double deg = std::max<double>(1.0, static_cast<double>(f.total_degree()));
    out.log10_error_bound = trials * (std::log10(deg) - std::log10(static_cast<double>(kFieldPrime)));
    out.error_bound = std::pow(10.0, out.log10_error_bound);
    auto syms = f.symbols();
    if (!syms.count(s)) return out;
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (s + 1)));
    std::uniform_int_distribution<std::uint64_t> dist(1, kFieldPrime - 1);
    unsigned failures = 0;
    for (unsigned t = 0; t < trials;) {
        std::map<SymbolId, std::uint64_t> point;
        for (auto x : syms) point[x] = dist(rng);
        std::uint64_t u = dist(rng), w = dist(rng);
        point[s] = u;
        auto a = field_eval(f, [&](SymbolId x) { return point.at(x); });
        point[s] = w;
        auto b = field_eval(f, [&](SymbolId x) { return point.at(x); });
        if (a.den == 0 || b.den == 0) {
            if (++failures >= 100) throw DependenceError("denominator vanishes at every sampled point");
            continue;
        }
        ++t;
        if (mulmod(a.num, b.den, kFieldPrime) != mulmod(b.num, a.den, kFieldPrime)) {
            out.depends = true;
            return out;
        }
    }
    return out;
}

}  // namespace

DependenceTest dependence_test(const RationalFunction& f, SymbolId s, unsigned trials, std::uint64_t seed) {
    return run_dependence(f, s, trials, seed);
}

DependenceTest dependence_test(const FormalPowerProduct& f, SymbolId s, unsigned trials, std::uint64_t seed) {
    return run_dependence(f, s, trials, seed);
}

bool depends_on(const RationalFunction& f, SymbolId s) { return dependence_test(f, s).depends; }
bool depends_on(const FormalPowerProduct& f, SymbolId s) { return dependence_test(f, s).depends; }

bool probably_equal(const RationalFunction& a, const RationalFunction& b, unsigned points, std::uint64_t seed) {
    auto syms = a.symbols();
    auto sb = b.symbols();
    syms.insert(sb.begin(), sb.end());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, kFieldPrime - 1);
    unsigned failures = 0;
    for (unsigned t = 0; t < points;) {
        std::map<SymbolId, std::uint64_t> point;
        for (auto x : syms) point[x] = dist(rng);
        auto v = [&](SymbolId x) { return point.at(x); };
        auto fa = field_eval(a, v);
        auto fb = field_eval(b, v);
        if (fa.den == 0 || fb.den == 0) {
            if (++failures >= 100) throw DependenceError("denominator vanishes at every sampled point");
            continue;
        }
        ++t;
        if (mulmod(fa.num, fb.den, kFieldPrime) != mulmod(fb.num, fa.den, kFieldPrime)) return false;
    }
    return true;
}

}  // namespace crnt
