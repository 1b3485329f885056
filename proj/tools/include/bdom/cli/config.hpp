#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "bdom/evolution.hpp"

namespace bdom::cli {

/// Flat key -> value settings, as read from a config file or the command line.
using KeyValues = std::map<std::string, std::string>;

/// Parses `key = value` lines. Blank lines and lines starting with '#' are
/// skipped. Throws ConfigError on malformed lines or repeated keys.
KeyValues parse_key_values(std::istream& in, const std::string& source = "config");
KeyValues load_key_values(const std::filesystem::path& path);

/// Every setting accepted by `run` and by config files.
struct ExperimentConfig {
    std::string domain = "four_peaks";
    StrategyKind strategy = StrategyKind::Bdma2;
    DomainOptions domain_options;

    std::optional<double> w;
    std::optional<double> sigma;
    std::optional<std::size_t> dom_slots;
    std::size_t k = 5;
    double p_add = 0.01;
    double lsnf_p = 0.5;
    double bin_width = 1.0;
    bool behavioral_diversity = false;

    std::size_t population = 20;
    std::uint64_t iterations = 10'000;
    std::size_t seeds = 10;
    std::uint64_t base_seed = 0;

    std::filesystem::path out = "out";
    std::uint64_t thin = 1;
    std::size_t workers = 0;  // 0: hardware concurrency

    /// Recognised keys: domain, strategy, s, D, toe_scale, ackley_form, w,
    /// sigma, dom_slots, k, p_add, p, bin_width, behavioral_diversity,
    /// population, iterations, seeds, base_seed, out, thin, workers.
    static ExperimentConfig from_key_values(const KeyValues& values);

    /// Fully resolved configuration for run `index` (seed = base_seed + index).
    [[nodiscard]] RunConfig run_config(std::size_t index) const;
    [[nodiscard]] std::uint64_t seed(std::size_t index) const noexcept { return base_seed + index; }
};

double parse_double(const std::string& key, const std::string& text);
std::uint64_t parse_unsigned(const std::string& key, const std::string& text);
bool parse_bool(const std::string& key, const std::string& text);

}  // namespace bdom::cli
