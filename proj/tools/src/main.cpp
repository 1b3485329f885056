#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "bdom/cli/commands.hpp"
#include "bdom/cli/config.hpp"

namespace {

struct RunFlag {
    const char* flag;
    const char* key;
    const char* help;
};

constexpr RunFlag kRunFlags[] = {
    {"--domain", "domain", "four_peaks, etf or focused_ackley"},
    {"--strategy", "strategy", "fitness, novelty, lsnf, nsga_nf, nslc, map_elites, bdma2 or bdma2a"},
    {"--seeds", "seeds", "number of runs"},
    {"--base-seed", "base_seed", "seed of the first run; run i uses base + i"},
    {"--iterations", "iterations", "iterations per run"},
    {"--out", "out", "output directory"},
    {"--s", "s", "ETF behavior stretch"},
    {"--D", "D", "focused Ackley dimension"},
    {"--toe-scale", "toe_scale", "ETF toe length per claw index"},
    {"--ackley-form", "ackley_form", "standard or peaked"},
    {"--w", "w", "BDMA-2 domination scale"},
    {"--k", "k", "novelty neighbors"},
    {"--p", "p", "LSNF fitness weight"},
    {"--p-add", "p_add", "archive admission probability"},
    {"--sigma", "sigma", "mutation standard deviation"},
    {"--bin-width", "bin_width", "MAP-Elites bin width"},
    {"--dom-slots", "dom_slots", "BDMA slots filled by domination"},
    {"--population", "population", "population size"},
    {"--behavioral-diversity", "behavioral_diversity", "NSGA-NF novelty over the whole pool"},
    {"--thin", "thin", "write every n-th CSV row"},
    {"--workers", "workers", "worker threads (0: all cores)"},
};

}  // namespace

int main(int argc, char** argv) {
    using namespace bdom::cli;
    CLI::App app{"Behavior domination experiments"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run one strategy on one domain for several seeds");
    std::string config_file;
    run->add_option("--config", config_file, "flat key = value file; flags override it");
    std::map<std::string, std::string> flags;
    for (const auto& f : kRunFlags) run->add_option(f.flag, flags[f.key], f.help);

    auto* suite = app.add_subcommand("suite", "run a full comparison table");
    std::string suite_name;
    SuiteOptions suite_options;
    suite->add_option("name", suite_name, "four_peaks, etf, ackley or all")->required();
    suite->add_option("--out", suite_options.out, "output directory")->required();
    suite->add_option("--iterations", suite_options.iterations, "iterations per run");
    suite->add_option("--seeds", suite_options.seeds, "runs per cell");
    suite->add_option("--base-seed", suite_options.base_seed, "seed of the first run");
    suite->add_option("--thin", suite_options.thin, "write every n-th CSV row");
    suite->add_option("--workers", suite_options.workers, "worker threads (0: all cores)");

    auto* spooky = app.add_subcommand("spooky", "replay the P / P' deletion example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*run) {
            KeyValues values;
            if (!config_file.empty()) values = load_key_values(config_file);
            for (const auto& f : kRunFlags)
                if (run->count(f.flag) > 0) values[f.key] = flags[f.key];
            return cmd_run(ExperimentConfig::from_key_values(values), std::cout);
        }
        if (*suite) return cmd_suite(suite_name, suite_options, std::cout);
        if (*spooky) return cmd_spooky(std::cout);
    } catch (const bdom::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitOk;
}
