#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bdom/cli/config.hpp"

namespace bdom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitSpookyMismatch = 2;

/// "mean (stderr)" with `decimals` digits after the point.
std::string format_mean_stderr(std::span<const double> samples, int decimals);

/// CSV name for one run: <domain tag>_<strategy>_seed<seed>.csv
std::string csv_name(const std::string& domain_tag, StrategyKind strategy, std::uint64_t seed);

/// One run per seed, a CSV per run and summary.txt in `config.out`.
int cmd_run(const ExperimentConfig& config, std::ostream& out);

struct SuiteOptions {
    std::uint64_t iterations = 10'000;
    std::size_t seeds = 10;
    std::uint64_t base_seed = 0;
    std::size_t workers = 0;
    std::uint64_t thin = 10;
    std::filesystem::path out = "suite";
};

/// A table of experiment cells: one row per parameter value, one column per
/// strategy, `seeds` runs per cell.
struct SuiteSpec {
    std::string name;
    std::string domain;
    std::string parameter;  // "s", "D" or empty
    std::vector<double> values;
    std::vector<StrategyKind> strategies;
    int decimals = 2;
};

/// "four_peaks", "etf" and "ackley"; "all" expands to the three.
std::vector<SuiteSpec> suite_specs(const std::string& name);

int cmd_suite(const std::string& name, const SuiteOptions& options, std::ostream& out);

struct SpookyCase {
    std::string strategy;
    std::string population;  // "P" or "P'"
    std::string deleted;
    std::string expected_deleted;
    double gnp = 0.0;
    double gnt = 0.0;
    double expected_gnp = 0.0;
    double expected_gnt = 0.0;

    [[nodiscard]] bool matches() const noexcept {
        return deleted == expected_deleted && gnp == expected_gnp && gnt == expected_gnt;
    }
};

/// LSNF, NSGA-NF and NSLC deletion on P and P' (k = 2, empty archive).
std::vector<SpookyCase> spooky_cases();

int cmd_spooky(std::ostream& out);

}  // namespace bdom::cli
