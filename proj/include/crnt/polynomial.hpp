#pragma once

#include "crnt/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace crnt {

// Symbol j < kStarOffset is k_{j+1}; kStarOffset + j is k_{j+1}*.
using SymbolId = std::uint32_t;
inline constexpr SymbolId kStarOffset = 1u << 16;

std::string symbol_name(SymbolId s);
inline bool is_starred(SymbolId s) { return s >= kStarOffset; }

struct Monomial {
    std::vector<std::pair<SymbolId, std::uint32_t>> factors;  // sorted by symbol, positive exponents

    std::uint32_t degree() const;
    std::uint32_t exponent(SymbolId s) const;
    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial quotient(const Monomial& o) const;  // this / o, requires o | this
    static Monomial gcd(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order with k1 the most significant symbol; the functor sorts descending.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class RationalFunction;

// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
class Polynomial {
public:
    using Terms = std::map<Monomial, Z, GrlexDescending>;

    Polynomial() = default;
    Polynomial(long c);
    explicit Polynomial(const Z& c);
    static Polynomial variable(SymbolId s);
    static Polynomial term(const Z& c, const Monomial& m);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Z constant_value() const;
    std::size_t size() const { return terms_.size(); }
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Z& leading_coefficient() const { return terms_.begin()->second; }
    std::uint32_t total_degree() const;
    std::uint32_t degree(SymbolId s) const;
    std::set<SymbolId> symbols() const;
    bool all_coefficients_positive() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial pow(unsigned e) const;
    bool operator==(const Polynomial& o) const = default;

    // Exact quotient when d divides this, otherwise nullopt.
    std::optional<Polynomial> divide_exact(const Polynomial& d) const;
    Z integer_content() const;
    Monomial monomial_content() const;
    Polynomial divide_monomial(const Monomial& m) const;
    Polynomial divide_integer(const Z& c) const;

    // Coefficients as a polynomial in s: degree -> coefficient.
    std::map<std::uint32_t, Polynomial> coefficients_in(SymbolId s) const;

    std::uint64_t eval_mod(const std::function<std::uint64_t(SymbolId)>& value, std::uint64_t p) const;
    double eval(const std::function<double(SymbolId)>& value) const;
    RationalFunction substitute(SymbolId s, const RationalFunction& r) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Z& c);
    Terms terms_;
};

// Greatest common divisor by recursive content / primitive-part pseudo-remainder sequences.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

class RationalFunction {
public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}
    RationalFunction(const Polynomial& n, const Polynomial& d);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction pow(long e) const;
    RationalFunction inverse() const;

    // Cancels the full polynomial gcd of numerator and denominator.
    RationalFunction simplified() const;
    // Exact equality of the represented functions (cross multiplication).
    bool equals(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const { return equals(o); }
    std::set<SymbolId> symbols() const;
    std::uint32_t total_degree() const { return num_.total_degree() + den_.total_degree(); }

    double eval(const std::function<double(SymbolId)>& value) const;
    RationalFunction substitute(SymbolId s, const RationalFunction& r) const;
    std::string to_string() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

struct PowerFactor {
    RationalFunction base;
    Q exponent;
};

class FormalPowerProduct {
public:
    FormalPowerProduct() = default;
    FormalPowerProduct(const RationalFunction& r);

    const std::vector<PowerFactor>& factors() const { return factors_; }
    void multiply(const RationalFunction& base, const Q& exponent);
    FormalPowerProduct operator*(const FormalPowerProduct& o) const;
    FormalPowerProduct pow(const Q& e) const;
    bool integer_exponents() const;
    Z exponent_lcm() const;  // lcm of exponent denominators
    // The product as a single rational function when every exponent is an integer.
    std::optional<RationalFunction> flatten() const;
    std::set<SymbolId> symbols() const;
    std::uint32_t total_degree() const;  // degree bound after clearing exponent denominators
    double eval(const std::function<double(SymbolId)>& value) const;
    FormalPowerProduct substitute(SymbolId s, const RationalFunction& r) const;
    std::string to_string() const;

private:
    std::vector<PowerFactor> factors_;
};

inline constexpr std::uint64_t kFieldPrime = 4611686018427387847ULL;  // 2^62 - 57

struct DependenceTest {
    bool depends = false;
    unsigned trials = 0;
    double error_bound = 0.0;        // Schwartz-Zippel bound on a false "independent" verdict
    double log10_error_bound = 0.0;
};

class DependenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

DependenceTest dependence_test(const RationalFunction& f, SymbolId s, unsigned trials = 20, std::uint64_t seed = 1);
DependenceTest dependence_test(const FormalPowerProduct& f, SymbolId s, unsigned trials = 20, std::uint64_t seed = 1);
bool depends_on(const RationalFunction& f, SymbolId s);
bool depends_on(const FormalPowerProduct& f, SymbolId s);

// Equality of two rational functions over the prime field at random points.
bool probably_equal(const RationalFunction& a, const RationalFunction& b, unsigned points = 20, std::uint64_t seed = 7);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

}  // namespace crnt
