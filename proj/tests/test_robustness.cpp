#include "crnt/pipeline.hpp"
#include "crnt/robustness.hpp"
#include "crnt/symbolic.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace crnt;

namespace {

std::string path(const std::string& name) { return std::string(CRNT_NETWORK_DIR) + "/" + name; }

Polynomial k(SymbolId i) { return Polynomial::variable(i - 1); }

std::size_t original(const Network& net, const std::string& text) {
    auto c = net.find_complex(parse_complex(net, text));
    REQUIRE(c.has_value());
    return *c;
}

const AcrClaim* claim_for(const Network& net, const RobustnessReport& rep, const std::string& species) {
    auto s = net.find_species(species);
    REQUIRE(s.has_value());
    for (const auto& a : rep.acr)
        if (a.species == *s) return &a;
    return nullptr;
}

bool has_source(const AcrClaim& a, Provenance p) {
    return std::find(a.sources.begin(), a.sources.end(), p) != a.sources.end();
}

bool has_caveat(const RobustnessReport& rep) {
    return std::find(rep.caveats.begin(), rep.caveats.end(), kPositiveSteadyStateCaveat) != rep.caveats.end();
}

// The recorded combination must rebuild e_i from the recorded pairs, exactly.
std::string combination_mismatch(const Network& net, const RobustnessReport& rep) {
    for (const auto& a : rep.acr) {
        QVec sum(net.n(), Q(0));
        for (const auto& [p, alpha] : a.combination) {
            if (p >= rep.pairs.size()) return "pair index out of range";
            const auto& y = net.complexes()[rep.pairs[p].y];
            const auto& yp = net.complexes()[rep.pairs[p].y_prime];
            for (std::size_t i = 0; i < net.n(); ++i) sum[i] += alpha * Q(y[i] - yp[i]);
        }
        for (std::size_t i = 0; i < net.n(); ++i)
            if (sum[i] != (i == a.species ? 1 : 0)) return "combination does not rebuild e_" + net.species()[a.species].name;
        if (!in_span(sum, rep.space_basis).in_span) return "e_i outside the robustness space";
    }
    return "";
}

}  // namespace

TEST_CASE("network1: deficiency-one pair (A+B, B) without value; ACR in A with k2/k1") {
    auto net = load_network(path("network1.crn"));
    auto direct = robust_pairs_direct(net);
    REQUIRE(direct.size() == 1);
    CHECK(direct[0].y == original(net, "A + B"));
    CHECK(direct[0].y_prime == original(net, "B"));
    CHECK_FALSE(direct[0].value.has_value());
    CHECK(direct[0].provenance == Provenance::DeficiencyOne);
    CHECK(direct[0].conditional);

    auto rep = acr_report(net, direct);
    auto* a = claim_for(net, rep, "A");
    REQUIRE(a != nullptr);
    CHECK_FALSE(a->value.has_value());
    CHECK(has_caveat(rep));

    auto out = run_robustness(net, {});
    a = claim_for(net, out.report, "A");
    REQUIRE(a != nullptr);
    REQUIRE(a->flat.has_value());
    CHECK(a->flat->equals(RationalFunction(k(2), k(1))));
    CHECK(claim_for(net, out.report, "B") == nullptr);
}

TEST_CASE("A <-> B: deficiency zero pair with value k2/k1, no ACR") {
    auto net = load_network(path("reversible.crn"));
    auto direct = robust_pairs_direct(net);
    REQUIRE(direct.size() == 1);
    CHECK(direct[0].provenance == Provenance::DeficiencyZero);
    CHECK_FALSE(direct[0].conditional);
    REQUIRE(direct[0].value.has_value());
    auto flat = direct[0].value->flatten();
    REQUIRE(flat.has_value());
    CHECK(flat->equals(RationalFunction(k(2), k(1))));
    auto rep = acr_report(net, direct);
    CHECK(rep.acr.empty());
    CHECK_FALSE(has_caveat(rep));
    CHECK(rep.space_basis.size() == 1);
}

TEST_CASE("EnvZ: no direct pairs; translated route gives ACR in Yp, resolvable through k12*") {
    auto net = load_network(path("envz.crn"));
    CHECK(robust_pairs_direct(net).empty());

    auto out = run_robustness(net, {});
    REQUIRE(out.translation.gnet.has_value());
    CHECK_FALSE(out.translation.gnet->proper());
    REQUIRE(out.report.resolvable.has_value());
    CHECK(*out.report.resolvable);
    REQUIRE(out.report.substitutions.size() == 1);
    CHECK(out.report.substitutions[0].reaction == 11);
    REQUIRE(out.report.substitutions[0].rate.has_value());
    CHECK(out.report.substitutions[0].rate->equals(RationalFunction(k(2) * (k(4) + k(5)) * k(12), k(1) * k(3))));

    auto* a = claim_for(net, out.report, "Yp");
    REQUIRE(a != nullptr);
    REQUIRE(a->flat.has_value());
    RationalFunction expected(k(1) * k(3) * k(5) * (k(10) + k(11)) * (k(13) + k(14)),
                              k(1) * k(3) * k(9) * k(11) * (k(13) + k(14)) +
                                  k(2) * (k(4) + k(5)) * (k(10) + k(11)) * k(12) * k(14));
    CHECK(a->flat->equals(expected));
    CHECK(has_source(*a, Provenance::TranslatedResolvable));
    CHECK_FALSE(depends_on(*a->flat, kStarOffset + 11));
    CHECK(has_caveat(out.report));
    CHECK(out.report.acr.size() == 1);
}

TEST_CASE("EnvZ: resolvable pair values are free of k12* after substitution") {
    auto net = load_network(path("envz.crn"));
    auto out = run_robustness(net, {});
    bool saw_star = false;
    for (const auto& p : out.translated_pairs.pairs)
        if (p.provenance == Provenance::TranslatedResolvable) {
            REQUIRE(p.value.has_value());
            auto flat = p.value->flatten();
            REQUIRE(flat.has_value());
            CHECK_FALSE(depends_on(*flat, kStarOffset + 11));
            saw_star = true;
        }
    CHECK(saw_star);
}

TEST_CASE("intro network: translated pairs and ACR in B with k5/(k1+k2)") {
    auto net = load_network(path("intro.crn"));
    CHECK(robust_pairs_direct(net).empty());
    auto out = run_robustness(net, {});
    CHECK(out.translated_pairs.pairs.size() == 6);
    for (const auto& p : out.translated_pairs.pairs) CHECK(p.provenance == Provenance::TranslatedProper);
    auto* b = claim_for(net, out.report, "B");
    REQUIRE(b != nullptr);
    REQUIRE(b->flat.has_value());
    CHECK(b->flat->simplified().to_string() == "k5/(k1 + k2)");
    CHECK(out.report.acr.size() == 1);
}

TEST_CASE("example44 network: improper search yields ACR in C from star-free ratios; proper search too") {
    auto net = load_network(path("example44.crn"));
    RationalFunction expected(k(1) * (k(5) + k(6)), k(4) * k(6));

    auto out = run_robustness(net, {});
    auto* c = claim_for(net, out.report, "C");
    REQUIRE(c != nullptr);
    REQUIRE(c->flat.has_value());
    CHECK(c->flat->equals(expected));
    CHECK(has_source(*c, Provenance::TranslatedStarFree));
    CHECK_FALSE(out.report.resolvable.has_value());
    CHECK(out.report.resolvability_evaluated);

    PipelineOptions proper;
    proper.milp.proper = true;
    auto out2 = run_robustness(net, proper);
    REQUIRE(out2.translation.gnet.has_value());
    CHECK(out2.translation.gnet->proper());
    auto* c2 = claim_for(net, out2.report, "C");
    REQUIRE(c2 != nullptr);
    if (c2->flat) CHECK(c2->flat->equals(expected));
    CHECK(has_caveat(out2.report));
}

TEST_CASE("drain network: nothing robust, no caveat") {
    auto out = run_robustness(load_network(path("drain.crn")), {});
    CHECK(out.report.pairs.empty());
    CHECK(out.report.acr.empty());
    CHECK(out.report.caveats.empty());
}

TEST_CASE("empty pair list gives an empty report") {
    auto net = load_network(path("network1.crn"));
    auto rep = acr_report(net, {});
    CHECK(rep.pairs.empty());
    CHECK(rep.space_basis.empty());
    CHECK(rep.acr.empty());
    CHECK(rep.caveats.empty());
    CHECK_FALSE(rep.resolvable.has_value());
}

TEST_CASE("provenance tags print as kebab case") {
    CHECK(std::string(to_string(Provenance::TranslatedStarFree)) == "translated-star-free");
    CHECK(std::string(to_string(Provenance::RobustnessSpace)) == "robustness-space");
}

TEST_CASE("bundled networks: combinations rebuild e_i, pair provenances are recorded, caveat accompanies conditional use") {
    for (const char* file : {"network1.crn", "reversible.crn", "intro.crn", "envz.crn", "example44.crn", "cycle.crn",
                             "drain.crn"}) {
        INFO(std::string(file));
        auto net = load_network(path(file));
        auto out = run_robustness(net, {});
        CHECK(combination_mismatch(net, out.report) == "");
        bool conditional = false;
        for (const auto& p : out.report.pairs) conditional = conditional || p.conditional;
        if (conditional || !out.translated_pairs.pairs.empty()) CHECK(has_caveat(out.report));
        for (const auto& a : out.report.acr) {
            CHECK_FALSE(a.sources.empty());
            CHECK_FALSE(has_source(a, Provenance::RobustnessSpace));
        }
    }
}

TEST_CASE("property: random networks give self-consistent reports") {
    std::mt19937_64 rng(2024);
    PipelineOptions opts;
    opts.limits.node_budget = 5000;
    int with_acr = 0;
    for (int c = 0; c < 120; ++c) {
        auto net = oracle::random_network(rng, oracle::uniform(rng, 1, 3), oracle::uniform(rng, 2, 5), 2);
        INFO(serialize_network(net));
        auto out = run_robustness(net, opts);
        CHECK(combination_mismatch(net, out.report) == "");
        for (const auto& p : out.report.pairs) {
            CHECK(p.y < net.c());
            CHECK(p.y_prime < net.c());
            CHECK(p.y != p.y_prime);
            if (p.provenance == Provenance::DeficiencyOne || p.provenance == Provenance::TranslatedNonterminal)
                CHECK(p.conditional);
        }
        // every basis vector lies in the span of the recorded pair differences
        std::vector<QVec> diffs;
        for (const auto& p : out.report.pairs) {
            QVec d(net.n());
            for (std::size_t i = 0; i < net.n(); ++i)
                d[i] = Q(net.complexes()[p.y][i] - net.complexes()[p.y_prime][i]);
            diffs.push_back(d);
        }
        for (const auto& b : out.report.space_basis) CHECK(in_span(b, diffs).in_span);
        if (!out.report.acr.empty()) ++with_acr;
    }
    CHECK(with_acr >= 5);
}
