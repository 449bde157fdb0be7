#include "crnt/milp.hpp"
#include "crnt/numeric_oracle.hpp"
#include "crnt/pipeline.hpp"
#include "crnt/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct RunConfig {
    std::string command;
    std::string input;
    std::string format = "text";
    bool proper = false;
    bool permutations = false;
    bool positive_translations = false;
    std::optional<std::int64_t> bound;
    std::string emit_lp;
    std::size_t node_budget = 200000;
    double time_budget = 60.0;
    unsigned trials = 50;
    std::uint64_t seed = 1;
    double tol = 1e-8;
    std::string output;
};

constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

void emit(const RunConfig& cfg, const crnt::Json& doc) {
    if (cfg.format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << crnt::render_text(doc);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

crnt::PipelineOptions pipeline_options(const RunConfig& cfg) {
    crnt::PipelineOptions o;
    o.milp.proper = cfg.proper;
    o.milp.permutations = cfg.permutations;
    o.milp.positive_translations = cfg.positive_translations;
    o.milp.bound = cfg.bound;
    o.limits.node_budget = cfg.node_budget;
    o.limits.time_budget = cfg.time_budget;
    return o;
}

int run(const RunConfig& cfg) {
    crnt::Network net = crnt::load_network(cfg.input);
    auto opts = pipeline_options(cfg);

    if (cfg.command == "analyze") {
        emit(cfg, crnt::structure_json(net, crnt::analyze(net)));
        return 0;
    }
    if (cfg.command == "modes") {
        emit(cfg, crnt::modes_json(net, crnt::enumerate_modes(net)));
        return 0;
    }
    if (cfg.command == "emit-lp") {
        auto model = crnt::build_model(net, crnt::enumerate_modes(net), opts.milp);
        std::string text = crnt::export_lp(model);
        std::string path = !cfg.output.empty() ? cfg.output : cfg.emit_lp;
        if (path.empty())
            std::cout << text;
        else
            write_file(path, text);
        return 0;
    }
    if (cfg.command == "translate") {
        auto t = crnt::run_translation(net, opts);
        if (!cfg.emit_lp.empty()) write_file(cfg.emit_lp, crnt::export_lp(t.model));
        emit(cfg, crnt::translation_json(net, t));
        return t.limit_hit ? kExitLimit : 0;
    }
    auto r = crnt::run_robustness(net, opts);
    if (!cfg.emit_lp.empty()) write_file(cfg.emit_lp, crnt::export_lp(r.translation.model));
    if (cfg.command == "robustness" || cfg.command == "acr") {
        emit(cfg, crnt::robustness_json(net, r, cfg.command == "acr"));
    } else {
        auto table = crnt::verify_claims(net, r.report, cfg.trials, cfg.seed, cfg.tol);
        emit(cfg, crnt::verification_json(table));
    }
    return r.translation.limit_hit ? kExitLimit : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Robust ratios and absolute concentration robustness via network translation"};
    app.require_subcommand(1);
    RunConfig cfg;

    struct Command {
        const char* name;
        const char* help;
    };
    const Command commands[] = {
        {"analyze", "structural numbers: complexes, linkage classes, rank, deficiency"},
        {"modes", "elementary flux modes, classified as cyclic or stoichiometric"},
        {"translate", "search for a translation scheme and summarize the translated network"},
        {"robustness", "robust complex pairs, robustness space, ACR and resolvability"},
        {"acr", "ACR species with symbolic values"},
        {"verify", "numeric steady-state check of every valued claim"},
        {"emit-lp", "write the translation-search model as an LP file"},
    };
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("input", cfg.input, "network file")->required();
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--proper", cfg.proper, "require a proper translation");
        sub->add_flag("--permutations", cfg.permutations, "search over reaction orders within modes");
        sub->add_flag("--positive-translations", cfg.positive_translations, "require nonnegative translation complexes");
        sub->add_option("--bound", cfg.bound, "bound B on translation entries");
        sub->add_option("--emit-lp", cfg.emit_lp, "also write the model in LP format to PATH");
        sub->add_option("--node-budget", cfg.node_budget, "branch-and-bound node limit");
        sub->add_option("--time-budget", cfg.time_budget, "solver time limit in seconds");
        sub->add_option("--trials", cfg.trials, "random rate draws for verify");
        sub->add_option("--seed", cfg.seed, "random seed for verify");
        sub->add_option("--tol", cfg.tol, "relative tolerance for verify");
        if (std::string(c.name) == "emit-lp") sub->add_option("-o,--output", cfg.output, "output path (default stdout)");
        sub->callback([&cfg, name = std::string(c.name)] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        return run(cfg);
    } catch (const crnt::ParseError& e) {
        std::cerr << "error: " << cfg.input << ": " << e.what() << "\n";
        return kExitInput;
    } catch (const crnt::NetworkError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const crnt::LpFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
