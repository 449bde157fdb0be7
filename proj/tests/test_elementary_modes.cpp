#include "crnt/elementary_modes.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace crnt;

namespace {

std::string path(const std::string& name) { return std::string(CRNT_NETWORK_DIR) + "/" + name; }

std::vector<std::string> support_labels(const Network& net, const ElementaryMode& md) {
    std::vector<std::string> out;
    for (auto j : md.support) out.push_back(net.reactions()[j].label);
    return out;
}

}  // namespace

TEST_CASE("network1 has one stoichiometric mode (1,1)") {
    auto net = parse_network("r1: A + B -> 2 B\nr2: B -> A");
    auto modes = enumerate_modes(net);
    REQUIRE(modes.size() == 1);
    CHECK(modes[0].flux == std::vector<std::int64_t>{1, 1});
    CHECK(modes[0].kind == ModeKind::Stoichiometric);
    CHECK(modes[0].unit_support);
    CHECK(classify(modes[0].flux, matrices(net).Ia) == ModeKind::Stoichiometric);
}

TEST_CASE("A <-> B has one cyclic mode") {
    auto net = parse_network("r: A <-> B");
    auto modes = enumerate_modes(net);
    REQUIRE(modes.size() == 1);
    CHECK(modes[0].kind == ModeKind::Cyclic);
    CHECK(std::string(to_string(modes[0].kind)) == "cyclic");
}

TEST_CASE("zero padding keeps a cyclic mode cyclic") {
    auto net = parse_network("r1: A -> B\nr2: B -> A\nr3: A -> C");
    CHECK(classify({1, 1, 0}, matrices(net).Ia) == ModeKind::Cyclic);
}

TEST_CASE("example44 network: cyclic {r4,r5} and the brute-force mode set") {
    auto net = load_network(path("example44.crn"));
    auto modes = enumerate_modes(net);
    bool cyclic45 = false;
    for (const auto& md : modes)
        if (md.kind == ModeKind::Cyclic && support_labels(net, md) == std::vector<std::string>{"r4", "r5"}) cyclic45 = true;
    CHECK(cyclic45);
    std::set<std::vector<std::int64_t>> got;
    for (const auto& md : modes) got.insert(md.flux);
    CHECK(got == oracle::brute_force_modes(net));
}

TEST_CASE("a network without cycles in its kernel cone has no modes") {
    CHECK(enumerate_modes(parse_network("A -> B")).empty());
}

TEST_CASE("modes are sorted by support") {
    auto net = load_network(path("envz.crn"));
    auto modes = enumerate_modes(net);
    for (std::size_t k = 1; k < modes.size(); ++k) CHECK(modes[k - 1].support < modes[k].support);
}

TEST_CASE("non-unit stoichiometric modes are flagged") {
    auto net = parse_network("r1: A -> B\nr2: 2 B -> 2 A");
    auto modes = enumerate_modes(net);
    REQUIRE(modes.size() == 1);
    CHECK(modes[0].flux == std::vector<std::int64_t>{2, 1});
    CHECK(modes[0].kind == ModeKind::Stoichiometric);
    CHECK_FALSE(modes[0].unit_support);
}

TEST_CASE("property: double description equals brute-force minimal supports (m <= 10)") {
    auto res = oracle::prop_modes_brute_force(200, 404);
    INFO(res.first_failure);
    CHECK(res.cases == 200);
    CHECK(res.failures == 0);
}
