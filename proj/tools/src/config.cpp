#include "bdom/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <istream>

namespace bdom::cli {
namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

KeyValues parse_key_values(std::istream& in, const std::string& source) {
    KeyValues out;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto eq = text.find('=');
        const std::string where = source + ":" + std::to_string(number);
        if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
        std::string key = trim(text.substr(0, eq));
        std::string value = trim(text.substr(eq + 1));
        if (key.empty()) throw ConfigError(where + ": empty key");
        if (!out.emplace(std::move(key), std::move(value)).second)
            throw ConfigError(where + ": repeated key '" + trim(text.substr(0, eq)) + "'");
    }
    return out;
}

KeyValues load_key_values(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    return parse_key_values(in, path.string());
}

double parse_double(const std::string& key, const std::string& text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ConfigError("'" + key + "' expects a number, got '" + text + "'");
    return value;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& text) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ConfigError("'" + key + "' expects a non-negative integer, got '" + text + "'");
    return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw ConfigError("'" + key + "' expects true or false, got '" + text + "'");
}

ExperimentConfig ExperimentConfig::from_key_values(const KeyValues& values) {
    ExperimentConfig c;
    using Setter = std::function<void(const std::string&, const std::string&)>;
    const std::map<std::string, Setter> setters{
        {"domain", [&](auto&, auto& v) { c.domain = v; }},
        {"strategy", [&](auto&, auto& v) { c.strategy = parse_strategy(v); }},
        {"s", [&](auto& k, auto& v) { c.domain_options.stretch = parse_double(k, v); }},
        {"D", [&](auto& k, auto& v) { c.domain_options.dimensions = parse_unsigned(k, v); }},
        {"toe_scale", [&](auto& k, auto& v) { c.domain_options.toe_scale = parse_double(k, v); }},
        {"ackley_form", [&](auto&, auto& v) { c.domain_options.ackley_form = parse_ackley_form(v); }},
        {"w", [&](auto& k, auto& v) { c.w = parse_double(k, v); }},
        {"sigma", [&](auto& k, auto& v) { c.sigma = parse_double(k, v); }},
        {"dom_slots", [&](auto& k, auto& v) { c.dom_slots = parse_unsigned(k, v); }},
        {"k", [&](auto& k, auto& v) { c.k = parse_unsigned(k, v); }},
        {"p_add", [&](auto& k, auto& v) { c.p_add = parse_double(k, v); }},
        {"p", [&](auto& k, auto& v) { c.lsnf_p = parse_double(k, v); }},
        {"bin_width", [&](auto& k, auto& v) { c.bin_width = parse_double(k, v); }},
        {"behavioral_diversity", [&](auto& k, auto& v) { c.behavioral_diversity = parse_bool(k, v); }},
        {"population", [&](auto& k, auto& v) { c.population = parse_unsigned(k, v); }},
        {"iterations", [&](auto& k, auto& v) { c.iterations = parse_unsigned(k, v); }},
        {"seeds", [&](auto& k, auto& v) { c.seeds = parse_unsigned(k, v); }},
        {"base_seed", [&](auto& k, auto& v) { c.base_seed = parse_unsigned(k, v); }},
        {"out", [&](auto&, auto& v) { c.out = v; }},
        {"thin", [&](auto& k, auto& v) { c.thin = parse_unsigned(k, v); }},
        {"workers", [&](auto& k, auto& v) { c.workers = parse_unsigned(k, v); }},
    };
    for (const auto& [key, value] : values) {
        const auto it = setters.find(key);
        if (it == setters.end()) throw ConfigError("unknown config key '" + key + "'");
        it->second(key, value);
    }
    if (c.seeds == 0) throw ConfigError("seeds must be at least 1");
    if (c.thin == 0) throw ConfigError("thin must be at least 1");
    if (!(c.bin_width > 0.0)) throw ConfigError("bin_width must be positive");
    if (c.dom_slots && *c.dom_slots > c.population)
        throw ConfigError("dom_slots cannot exceed the population size");
    // Validate everything that depends on the domain before any run starts.
    c.run_config(0).resolve();
    return c;
}

RunConfig ExperimentConfig::run_config(std::size_t index) const {
    RunConfig rc;
    rc.domain = domain;
    rc.domain_options = domain_options;
    rc.strategy = RankingStrategy::make(strategy, population);
    rc.strategy.novelty.k = k;
    rc.strategy.novelty.p_add = p_add;
    rc.strategy.lsnf.p = lsnf_p;
    rc.strategy.bin_width = bin_width;
    rc.strategy.behavioral_diversity = behavioral_diversity;
    if (dom_slots) {
        rc.strategy.domination.dom_slots = *dom_slots;
        rc.strategy.domination.nov_slots = population - *dom_slots;
    }
    rc.ea.population_size = population;
    rc.ea.iterations = iterations;
    rc.ea.seed = seed(index);
    rc.mutation_sigma = sigma;
    rc.w = w;
    return rc;
}

}  // namespace bdom::cli
