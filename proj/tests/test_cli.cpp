#include "crnt/milp.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace {

using Json = nlohmann::ordered_json;

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args) {
    std::string cmd = std::string(CRNT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    Run r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string net(const std::string& name) { return std::string(CRNT_NETWORK_DIR) + "/" + name + ".crn"; }

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "crnt_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string write_scratch(const std::string& name, const std::string& text) {
    auto p = scratch(name);
    std::ofstream(p) << text;
    return p.string();
}

void collect_leaves(const Json& j, std::vector<std::string>& keys, std::vector<std::string>& leaves) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            keys.push_back(it.key());
            collect_leaves(it.value(), keys, leaves);
        }
    } else if (j.is_array()) {
        for (const auto& v : j) collect_leaves(v, keys, leaves);
    } else if (j.is_null()) {
        leaves.push_back("none");
    } else if (j.is_string()) {
        leaves.push_back(j.get<std::string>());
    } else {
        leaves.push_back(j.dump());
    }
}

// Every key and scalar of the JSON document appears in the text rendering.
std::string parity_gap(const std::string& args) {
    auto js = cli(args + " --format json");
    auto tx = cli(args);
    if (js.code != tx.code) return "exit codes differ";
    std::vector<std::string> keys, leaves;
    collect_leaves(Json::parse(js.out), keys, leaves);
    for (const auto& k : keys)
        if (tx.out.find(k + ":") == std::string::npos) return "key missing from text: " + k;
    for (const auto& l : leaves)
        if (tx.out.find(l) == std::string::npos) return "value missing from text: " + l;
    return "";
}

const char* kNetworks[] = {"network1", "reversible", "intro", "envz", "example44", "cycle", "drain"};

}  // namespace

TEST_CASE("exit 2 on input errors") {
    CHECK(cli("analyze /nonexistent/file.crn").code == 2);
    CHECK(cli("analyze " + write_scratch("empty.crn", "")).code == 2);
    CHECK(cli("analyze " + write_scratch("comments.crn", "# nothing here\n")).code == 2);
    CHECK(cli("analyze " + write_scratch("bad.crn", "r1: A -> B\nr2: A -> -> B\n")).code == 2);
    CHECK(cli("analyze " + net("network1") + " --format yaml").code == 2);
    CHECK(cli("analyze " + net("network1") + " --no-such-flag").code == 2);
    CHECK(cli("").code == 2);
}

TEST_CASE("syntax errors carry the line number on stderr") {
    auto path = write_scratch("bad2.crn", "r1: A -> B\n\nr3: A + -> C\n");
    std::string cmd = std::string(CRNT_CLI_PATH) + " analyze " + path + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[1024];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    pclose(p);
    CHECK(out.find("line 3") != std::string::npos);
}

TEST_CASE("exit 3 when the solver hits its node budget") {
    auto r = cli("translate " + net("envz") + " --node-budget 1");
    CHECK(r.code == 3);
    CHECK(r.out.find("status: limit") != std::string::npos);
}

TEST_CASE("findings are successful runs") {
    auto r = cli("acr " + net("drain"));
    CHECK(r.code == 0);
    CHECK(r.out.find("acr: (none)") != std::string::npos);
}

TEST_CASE("acr on the intro network reports B with k5/(k1 + k2)") {
    auto r = cli("acr " + net("intro") + " --format json");
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    REQUIRE(j["acr"].size() == 1);
    CHECK(j["acr"][0]["species"] == "B");
    CHECK(j["acr"][0]["value"] == "k5/(k1 + k2)");
}

TEST_CASE("analyze envz: structural numbers") {
    auto r = cli("analyze " + net("envz") + " --format json");
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["n"] == 9);
    CHECK(j["c"] == 13);
    CHECK(j["l"] == 4);
    CHECK(j["s"] == 7);
    CHECK(j["deficiency"] == 2);
}

TEST_CASE("JSON and text carry the same fields") {
    for (const char* n : kNetworks) {
        INFO(std::string(n));
        for (const char* cmd : {"analyze", "modes", "translate", "robustness", "acr"})
            CHECK(parity_gap(std::string(cmd) + " " + net(n)) == "");
    }
    CHECK(parity_gap("verify " + net("intro") + " --trials 5") == "");
    CHECK(parity_gap("robustness " + net("example44") + " --proper") == "");
}

TEST_CASE("identical inputs give byte-identical reports") {
    for (const char* args : {"robustness", "verify --trials 8 --seed 5", "translate --permutations"}) {
        std::string a = std::string(args) + " " + net("example44") + " --format json";
        CHECK(cli(a).out == cli(a).out);
    }
    CHECK(cli("verify " + net("intro") + " --trials 4 --seed 1").out !=
          cli("verify " + net("intro") + " --trials 4 --seed 2").out);
}

TEST_CASE("golden reports") {
    for (const char* n : kNetworks) {
        INFO(std::string(n));
        std::string dir = std::string(CRNT_NETWORK_DIR) + "/golden/";
        CHECK(cli("robustness " + net(n) + " --format json").out == slurp(dir + n + ".robustness.json"));
        CHECK(cli("analyze " + net(n) + " --format json").out == slurp(dir + n + ".analyze.json"));
    }
    CHECK(cli("robustness " + net("example44") + " --proper --format json").out ==
          slurp(std::string(CRNT_NETWORK_DIR) + "/golden/example44.proper.robustness.json"));
}

TEST_CASE("emit-lp writes a file that parses back; translate --emit-lp writes the same model") {
    auto a = scratch("intro_a.lp"), b = scratch("intro_b.lp");
    CHECK(cli("emit-lp " + net("intro") + " -o " + a.string()).code == 0);
    CHECK(cli("translate " + net("intro") + " --emit-lp " + b.string()).code == 0);
    auto text = slurp(a.string());
    CHECK(text == slurp(b.string()));
    auto model = crnt::parse_lp(text);
    CHECK(model.count(crnt::Family::Count) > 0);
    CHECK(cli("emit-lp " + net("intro")).out == text);
}

TEST_CASE("verify reports a pass verdict for every claim on the intro network") {
    auto r = cli("verify " + net("intro") + " --trials 10 --format json");
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    REQUIRE_FALSE(j["claims"].empty());
    for (const auto& row : j["claims"]) CHECK(row["verdict"] == "pass");
}
