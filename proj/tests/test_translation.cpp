#include "crnt/numeric_oracle.hpp"
#include "crnt/translation.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace crnt;

namespace {

std::string path(const std::string& name) { return std::string(CRNT_NETWORK_DIR) + "/" + name; }

const char* kEnvzScheme =
    "r1: +XD +XT +Y\nr2: +XD +XT +Y\nr3: +XD +XT +Y\nr4: +XD +XT +Y\nr5: +XD +XT +Y\n"
    "r6: +XD +XT\nr7: +XD +XT\nr8: +XD +XT\n"
    "r9: +XD +X\nr10: +XD +X\nr11: +XD +X\n"
    "r12: +X +XT\nr13: +X +XT\nr14: +X +XT\n";

const char* kExample44Scheme = "r1: +A\nr2: +A\nr3: +A -C\nr4: 0\nr5: 0\nr6: 0\n";
const char* kIntroScheme = "r1: 0\nr2: 0\nr3: +A\nr4: +A\nr5: +A\n";

std::size_t vertex(const GeneralizedNetwork& g, const std::string& text) {
    auto v = g.base.find_complex(parse_complex(g.base, text));
    REQUIRE(v.has_value());
    return *v;
}

std::size_t original(const Network& net, const std::string& text) {
    auto c = net.find_complex(parse_complex(net, text));
    REQUIRE(c.has_value());
    return *c;
}

std::vector<std::string> labels(const Network& net, const std::vector<std::size_t>& rs) {
    std::vector<std::string> out;
    for (auto r : rs) out.push_back(net.reactions()[r].label);
    return out;
}

// Mass-action right-hand side of the generalized network: rate of r~ is the sum of its preimage rates, its
// monomial is x^h(source).
std::vector<double> generalized_rhs(const GeneralizedNetwork& g, const std::vector<double>& k, const std::vector<double>& x) {
    std::vector<double> f(g.base.n(), 0.0);
    for (std::size_t rt = 0; rt < g.base.m(); ++rt) {
        double rate = 0;
        for (auto r : g.preimage(rt)) rate += k[r];
        const auto& h = g.kinetic_complex(g.base.reactions()[rt].source);
        double mono = rate;
        for (std::size_t i = 0; i < h.size(); ++i) mono *= std::pow(x[i], static_cast<double>(h[i]));
        for (std::size_t i = 0; i < g.base.n(); ++i)
            f[i] += mono * static_cast<double>(g.base.product(rt)[i] - g.base.source(rt)[i]);
    }
    return f;
}

}  // namespace

TEST_CASE("network1 with r2 shifted by B is the proper A+B <-> 2B translation") {
    auto net = parse_network("r1: A + B -> 2 B\nr2: B -> A");
    auto g = apply_scheme(net, parse_scheme(net, "r1: 0\nr2: +B"));
    CHECK(g.proper());
    CHECK(g.improper_set.empty());
    CHECK(g.base.c() == 2);
    CHECK(g.base.format_complex(g.base.reactions()[1].source) == "2 B");
    CHECK(net.format_complex(g.kinetic_complex(vertex(g, "2 B"))) == "B");
    CHECK(net.format_complex(g.kinetic_complex(vertex(g, "A + B"))) == "A + B");
    auto d = generalized_deficiencies(g);
    CHECK(d.stoichiometric == 0);
    CHECK(d.weakly_reversible);
}

TEST_CASE("zero scheme gives an isomorphic proper network") {
    auto net = load_network(path("network1.crn"));
    auto g = apply_scheme(net, TranslationScheme::zero(net));
    CHECK(g.proper());
    CHECK(g.base.c() == net.c());
    CHECK(g.base.m() == net.m());
    CHECK(generalized_deficiencies(g).stoichiometric == 1);
    auto rates = translated_rates(g);
    for (std::size_t r = 0; r < net.m(); ++r) {
        REQUIRE(rates.terms[g.f_map[r]].size() == 1);
        CHECK(rates.terms[g.f_map[r]][0] == RateSymbol{r, false});
    }
}

TEST_CASE("EnvZ translation is improper, with XT+Yp and XD+Yp merged") {
    auto net = load_network(path("envz.crn"));
    auto g = apply_scheme(net, parse_scheme(net, kEnvzScheme));
    CHECK_FALSE(g.proper());
    auto v = vertex(g, "XD + X + XT + Yp");
    CHECK(g.g_map[original(net, "XT + Yp")] == v);
    CHECK(g.g_map[original(net, "XD + Yp")] == v);
    CHECK(g.improper_vertices() == std::vector<std::size_t>{v});
    CHECK_FALSE(g.kinetics_total());

    auto chosen = choose_kinetics(g, {{v, original(net, "XT + Yp")}});
    CHECK(labels(net, chosen.improper_set) == std::vector<std::string>{"r12"});
    auto d = generalized_deficiencies(chosen);
    CHECK(d.stoichiometric == 0);
    REQUIRE(d.kinetic.has_value());
    CHECK(*d.kinetic == 0);
    CHECK(d.weakly_reversible);

    auto rates = translated_rates(chosen);
    const auto& t12 = rates.terms[chosen.f_map[11]];
    REQUIRE(t12.size() == 1);
    CHECK(symbol_name(t12[0]) == "k12*");

    CHECK_THROWS_AS(choose_kinetics(g, {{v, original(net, "XD")}}), TranslationError);
}

TEST_CASE("example44 network improper translation: choosing A+C gives R_I = {r3}") {
    auto net = load_network(path("example44.crn"));
    auto g = apply_scheme(net, parse_scheme(net, kExample44Scheme));
    auto v = vertex(g, "A + C");
    auto chosen = choose_kinetics(g, {{v, original(net, "A + C")}});
    CHECK(labels(net, chosen.improper_set) == std::vector<std::string>{"r3"});
    CHECK(kinetic_choices(g).size() == 2);
}

TEST_CASE("intro translation has deficiency zero and one linkage class") {
    auto net = load_network(path("intro.crn"));
    auto g = apply_scheme(net, parse_scheme(net, kIntroScheme));
    CHECK(g.proper());
    CHECK(g.base.c() == 4);
    auto rep = analyze(g.base);
    CHECK(rep.l == 1);
    CHECK(rep.s == 3);
    auto d = generalized_deficiencies(g);
    CHECK(d.stoichiometric == 0);
    CHECK(d.weakly_reversible);
}

TEST_CASE("reactions merged by f have summed rate constants") {
    auto net = parse_network("r1: A -> B\nr2: 2 A -> A + B");
    auto g = apply_scheme(net, parse_scheme(net, "r1: +A\nr2: 0"));
    CHECK(g.f_map[0] == g.f_map[1]);
    CHECK(g.base.m() == 1);
    CHECK(g.preimage(g.f_map[0]) == std::vector<std::size_t>{0, 1});
    auto chosen = choose_kinetics(g, {{vertex(g, "2 A"), original(net, "2 A")}});
    auto terms = translated_rates(chosen).terms[chosen.f_map[0]];
    REQUIRE(terms.size() == 2);
    CHECK(symbol_name(terms[0]) == "k1*");
    CHECK(symbol_name(terms[1]) == "k2");
}

TEST_CASE("check_scheme rejects React and PosC violations, naming the reaction") {
    auto net = parse_network("r1: A -> B\nr2: A -> C");
    CHECK_THROWS_WITH_AS(check_scheme(net, parse_scheme(net, "r1: +B\nr2: 0")), doctest::Contains("r"), TranslationError);
    CHECK_THROWS_WITH_AS(apply_scheme(net, parse_scheme(net, "r1: -A\nr2: -A")), doctest::Contains("r1"),
                         TranslationError);
    CHECK_NOTHROW(check_scheme(net, parse_scheme(net, "r1: +B\nr2: +B")));
}

TEST_CASE("scheme text round trip") {
    auto net = load_network(path("envz.crn"));
    auto sc = parse_scheme(net, kEnvzScheme);
    CHECK(parse_scheme(net, format_scheme(net, sc)).shifts == sc.shifts);
    CHECK_THROWS_AS(parse_scheme(net, "r99: +X"), ParseError);
    CHECK_THROWS_AS(parse_scheme(net, "r1: X"), ParseError);
}

TEST_CASE("property: random valid schemes preserve reaction vectors; proper ones are dynamically equivalent") {
    std::mt19937_64 rng(505);
    std::size_t proper_cases = 0, improper_cases = 0;
    for (int c = 0; c < 300; ++c) {
        auto net = oracle::random_network(rng, oracle::uniform(rng, 1, 4), oracle::uniform(rng, 2, 8), 2);
        TranslationScheme sc = TranslationScheme::zero(net);
        std::map<std::size_t, std::vector<std::int64_t>> by_source;
        for (std::size_t r = 0; r < net.m(); ++r) {
            auto s = net.reactions()[r].source;
            if (!by_source.count(s)) {
                std::vector<std::int64_t> u(net.n());
                for (auto& x : u) x = static_cast<std::int64_t>(oracle::uniform(rng, 0, 3)) - 1;
                by_source[s] = u;
            }
            for (std::size_t i = 0; i < net.n(); ++i) sc.shifts(i, r) = by_source[s][i];
        }
        bool valid = true;
        for (std::size_t r = 0; r < net.m(); ++r)
            for (std::size_t i = 0; i < net.n(); ++i)
                if (net.source(r)[i] + sc.shifts(i, r) < 0 || net.product(r)[i] + sc.shifts(i, r) < 0) valid = false;
        INFO(serialize_network(net) << format_scheme(net, sc));
        if (!valid) {
            CHECK_THROWS_AS(apply_scheme(net, sc), TranslationError);
            continue;
        }
        auto g = oracle::with_kinetics(apply_scheme(net, sc));
        CHECK(oracle::translation_invariants(net, g) == "");
        if (!g.proper()) {
            ++improper_cases;
            continue;
        }
        ++proper_cases;
        for (int t = 0; t < 20; ++t) {
            std::vector<double> k(net.m()), x(net.n());
            for (auto& v : k) v = std::exp(std::uniform_real_distribution<double>(-2, 2)(rng));
            for (auto& v : x) v = std::exp(std::uniform_real_distribution<double>(-2, 2)(rng));
            auto f = mass_action_rhs(net, k, x);
            auto fg = generalized_rhs(g, k, x);
            double scale = 0;
            for (double v : f) scale = std::max(scale, std::abs(v));
            for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(f[i] - fg[i]) <= 1e-12 * std::max(scale, 1e-300));
        }
    }
    CHECK(proper_cases >= 50);
    CHECK(improper_cases >= 10);
}

TEST_CASE("property: extracted schemes preserve reaction vectors and translate sigma-zero modes to cycles") {
    auto res = oracle::prop_scheme_preservation(200, 606);
    INFO(res.first_failure);
    CHECK(res.cases == 200);
    CHECK(res.failures == 0);
}
