#include "bdom/cli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "bdom/cli/csv.hpp"
#include "bdom/cli/runner.hpp"
#include "bdom/metrics.hpp"
#include "bdom/stats.hpp"

namespace bdom::cli {
namespace {

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string domain_tag(const std::string& domain, const DomainOptions& options) {
    if (domain == "etf") return "etf_s" + format_double(options.stretch.value_or(100.0));
    if (domain == "focused_ackley" || domain == "ackley")
        return "focused_ackley_D" + std::to_string(options.dimensions.value_or(10));
    return domain;
}

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw ConfigError("cannot create output directory " + dir.string());
}

struct FinalScores {
    std::vector<double> max_fitness, total_bin, current_bin;

    void add(const RunLog& log) {
        max_fitness.push_back(log.last().best_fitness);
        total_bin.push_back(log.last().total_bin_score);
        current_bin.push_back(log.last().current_bin_score);
    }
};

/// Left-aligned text table.
class Table {
public:
    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    void print(std::ostream& out) const {
        std::vector<std::size_t> width;
        for (const auto& r : rows_)
            for (std::size_t c = 0; c < r.size(); ++c) {
                if (width.size() <= c) width.push_back(0);
                width[c] = std::max(width[c], r[c].size());
            }
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t c = 0; c < r.size(); ++c) {
                line += r[c];
                if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
            }
            out << line << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string p_value_text(std::span<const double> a, std::span<const double> b) {
    const auto r = mann_whitney_u(a, b, Alternative::Greater);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", r.p_value);
    return buf;
}

}  // namespace

std::string format_mean_stderr(std::span<const double> samples, int decimals) {
    const auto m = mean_stderr(samples);
    return fixed(m.mean, decimals) + " (" + fixed(m.standard_error, decimals) + ")";
}

std::string csv_name(const std::string& domain_tag, StrategyKind strategy, std::uint64_t seed) {
    return domain_tag + "_" + std::string(strategy_name(strategy)) + "_seed" + std::to_string(seed) + ".csv";
}

// ---------------------------------------------------------------------------
// run

int cmd_run(const ExperimentConfig& config, std::ostream& out) {
    ensure_directory(config.out);
    std::vector<RunConfig> configs;
    for (std::size_t i = 0; i < config.seeds; ++i) configs.push_back(config.run_config(i));

    RunConfig resolved = configs.front();
    const auto domain = resolved.resolve();

    const auto logs = run_batch(configs, config.workers);
    const std::string tag = domain_tag(config.domain, config.domain_options);
    FinalScores scores;
    for (std::size_t i = 0; i < logs.size(); ++i) {
        write_csv(config.out / csv_name(tag, config.strategy, config.seed(i)), logs[i].rows, config.thin);
        scores.add(logs[i]);
    }

    std::ostringstream summary;
    Table header;
    header.row({"domain", tag});
    header.row({"strategy", std::string(strategy_label(config.strategy))});
    header.row({"iterations", std::to_string(config.iterations)});
    header.row({"seeds", std::to_string(config.seed(0)) + ".." + std::to_string(config.seed(config.seeds - 1))});
    header.row({"sigma", format_double(resolved.ea.mutation_sigma)});
    if (resolved.strategy.uses_domination()) header.row({"w", format_double(resolved.strategy.domination.w)});
    header.print(summary);
    summary << '\n';

    const bool bins = !domain->bins().empty();
    Table table;
    std::vector<std::string> head{"strategy", "runs", "max fitness"};
    std::vector<std::string> line{std::string(strategy_label(config.strategy)), std::to_string(logs.size()),
                                  format_mean_stderr(scores.max_fitness, 3)};
    if (bins) {
        head.insert(head.end(), {"total bin score", "current bin score"});
        line.push_back(format_mean_stderr(scores.total_bin, 3));
        line.push_back(format_mean_stderr(scores.current_bin, 3));
    }
    table.row(head);
    table.row(line);
    table.print(summary);
    summary << '\n';

    Table per_seed;
    head.erase(head.begin(), head.begin() + 2);
    head.insert(head.begin(), "seed");
    per_seed.row(head);
    for (std::size_t i = 0; i < logs.size(); ++i) {
        std::vector<std::string> cells{std::to_string(config.seed(i)), format_double(scores.max_fitness[i])};
        if (bins) {
            cells.push_back(format_double(scores.total_bin[i]));
            cells.push_back(format_double(scores.current_bin[i]));
        }
        per_seed.row(cells);
    }
    per_seed.print(summary);

    const auto path = config.out / "summary.txt";
    std::ofstream file(path);
    if (!file) throw ConfigError("cannot write " + path.string());
    file << summary.str();
    out << summary.str();
    return kExitOk;
}

// ---------------------------------------------------------------------------
// suite

std::vector<SuiteSpec> suite_specs(const std::string& name) {
    using K = StrategyKind;
    const std::vector<K> table_strategies{K::Fitness, K::Novelty, K::Nslc, K::Bdma2, K::Bdma2a};
    const SuiteSpec four_peaks{"four_peaks", "four_peaks", "", {0.0}, {std::begin(kAllStrategies), std::end(kAllStrategies)}, 1};
    const SuiteSpec etf{"etf", "etf", "s", {100.0, 1000.0, 10000.0}, table_strategies, 2};
    const SuiteSpec ackley{"ackley", "focused_ackley", "D", {10.0, 20.0, 30.0}, table_strategies, 3};
    if (name == "four_peaks") return {four_peaks};
    if (name == "etf") return {etf};
    if (name == "ackley") return {ackley};
    if (name == "all") return {four_peaks, etf, ackley};
    throw ConfigError("unknown suite '" + name + "' (expected four_peaks, etf, ackley or all)");
}

namespace {

ExperimentConfig cell_config(const SuiteSpec& spec, double value, StrategyKind strategy, const SuiteOptions& options) {
    ExperimentConfig c;
    c.domain = spec.domain;
    c.strategy = strategy;
    if (spec.parameter == "s") c.domain_options.stretch = value;
    if (spec.parameter == "D") c.domain_options.dimensions = static_cast<std::size_t>(value);
    c.iterations = options.iterations;
    c.seeds = options.seeds;
    c.base_seed = options.base_seed;
    return c;
}

void write_curves(const std::filesystem::path& path, const SuiteSpec& spec,
                  const std::vector<std::vector<const RunLog*>>& by_strategy, std::uint64_t thin) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << "iteration";
    for (auto kind : spec.strategies) out << ',' << strategy_name(kind) << "_total," << strategy_name(kind) << "_current";
    out << '\n';
    const std::size_t rows = by_strategy.front().front()->rows.size();
    for (std::size_t r = 0; r < rows; ++r) {
        if (r % thin != 0 && r + 1 != rows) continue;
        out << by_strategy.front().front()->rows[r].iteration;
        for (const auto& runs : by_strategy) {
            double total = 0.0, current = 0.0;
            for (const auto* log : runs) {
                total += log->rows[r].total_bin_score;
                current += log->rows[r].current_bin_score;
            }
            out << ',' << format_double(total / static_cast<double>(runs.size())) << ','
                << format_double(current / static_cast<double>(runs.size()));
        }
        out << '\n';
    }
}

void run_suite(const SuiteSpec& spec, const SuiteOptions& options, std::ostream& out) {
    const auto dir = options.out / spec.name;
    ensure_directory(dir);

    std::vector<ExperimentConfig> cells;
    std::vector<RunConfig> configs;
    for (double value : spec.values)
        for (auto kind : spec.strategies) {
            cells.push_back(cell_config(spec, value, kind, options));
            for (std::size_t i = 0; i < options.seeds; ++i) configs.push_back(cells.back().run_config(i));
        }
    out << spec.name << ": " << configs.size() << " runs\n" << std::flush;
    const auto logs = run_batch(configs, options.workers);

    // scores[value][strategy]
    std::vector<std::vector<FinalScores>> scores(spec.values.size(), std::vector<FinalScores>(spec.strategies.size()));
    std::vector<std::vector<const RunLog*>> by_strategy(spec.strategies.size());
    std::size_t n = 0;
    for (std::size_t v = 0; v < spec.values.size(); ++v)
        for (std::size_t s = 0; s < spec.strategies.size(); ++s) {
            const auto& cell = cells[v * spec.strategies.size() + s];
            const auto tag = domain_tag(cell.domain, cell.domain_options);
            for (std::size_t i = 0; i < options.seeds; ++i, ++n) {
                write_csv(dir / csv_name(tag, cell.strategy, cell.seed(i)), logs[n].rows, options.thin);
                scores[v][s].add(logs[n]);
                by_strategy[s].push_back(&logs[n]);
            }
        }

    std::ostringstream report;
    const auto index_of = [&](StrategyKind kind) {
        return static_cast<std::size_t>(std::find(spec.strategies.begin(), spec.strategies.end(), kind) -
                                        spec.strategies.begin());
    };
    const StrategyKind refs[] = {StrategyKind::Bdma2, StrategyKind::Bdma2a};

    if (spec.parameter.empty()) {
        report << spec.name << ": final scores, mean (std. err.) over " << options.seeds << " runs\n\n";
        Table table;
        table.row({"strategy", "total bin score", "current bin score", "max fitness"});
        for (std::size_t s = 0; s < spec.strategies.size(); ++s)
            table.row({std::string(strategy_label(spec.strategies[s])),
                       format_mean_stderr(scores[0][s].total_bin, spec.decimals),
                       format_mean_stderr(scores[0][s].current_bin, spec.decimals),
                       format_mean_stderr(scores[0][s].max_fitness, spec.decimals)});
        table.print(report);
        for (const char* measure : {"current bin score", "total bin score"}) {
            const bool current = std::string(measure) == "current bin score";
            report << "\none-sided Mann-Whitney p, reference > other, " << measure << "\n\n";
            Table p;
            std::vector<std::string> head{"reference"};
            for (auto kind : spec.strategies) head.emplace_back(strategy_label(kind));
            p.row(head);
            for (auto ref : refs) {
                const auto& a = scores[0][index_of(ref)];
                std::vector<std::string> line{std::string(strategy_label(ref))};
                for (std::size_t s = 0; s < spec.strategies.size(); ++s)
                    line.push_back(spec.strategies[s] == ref
                                       ? "-"
                                       : p_value_text(current ? a.current_bin : a.total_bin,
                                                      current ? scores[0][s].current_bin : scores[0][s].total_bin));
                p.row(line);
            }
            p.print(report);
        }
        write_curves(dir / "curves.csv", spec, by_strategy, options.thin);
    } else {
        report << spec.name << ": mean max fitness (std. err.) over " << options.seeds << " runs\n\n";
        Table table;
        std::vector<std::string> head{spec.parameter};
        for (auto kind : spec.strategies) head.emplace_back(strategy_label(kind));
        table.row(head);
        for (std::size_t v = 0; v < spec.values.size(); ++v) {
            std::vector<std::string> line{format_double(spec.values[v])};
            for (std::size_t s = 0; s < spec.strategies.size(); ++s)
                line.push_back(format_mean_stderr(scores[v][s].max_fitness, spec.decimals));
            table.row(line);
        }
        table.print(report);
        report << "\none-sided Mann-Whitney p, reference > other, max fitness\n\n";
        Table p;
        std::vector<std::string> phead{spec.parameter, "reference"};
        for (auto kind : spec.strategies) phead.emplace_back(strategy_label(kind));
        p.row(phead);
        for (std::size_t v = 0; v < spec.values.size(); ++v)
            for (auto ref : refs) {
                std::vector<std::string> line{format_double(spec.values[v]), std::string(strategy_label(ref))};
                const auto& a = scores[v][index_of(ref)].max_fitness;
                for (std::size_t s = 0; s < spec.strategies.size(); ++s)
                    line.push_back(spec.strategies[s] == ref ? "-" : p_value_text(a, scores[v][s].max_fitness));
                p.row(line);
            }
        p.print(report);
    }

    std::ofstream file(dir / "table.txt");
    if (!file) throw ConfigError("cannot write " + (dir / "table.txt").string());
    file << report.str();
    out << '\n' << report.str() << '\n';
}

}  // namespace

int cmd_suite(const std::string& name, const SuiteOptions& options, std::ostream& out) {
    if (options.seeds == 0) throw ConfigError("seeds must be at least 1");
    if (options.thin == 0) throw ConfigError("thin must be at least 1");
    for (const auto& spec : suite_specs(name)) run_suite(spec, options, out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// spooky

std::vector<SpookyCase> spooky_cases() {
    const std::vector<Individual> p{{0, 0.0, {0.0}}, {1, 11.0, {10.0}}, {2, 10.0, {11.0}}, {3, 0.0, {21.0}}};
    std::vector<Individual> p_prime = p;
    p_prime[3] = Individual(4, 0.0, {22.0});

    struct Population {
        const char* name;
        const std::vector<Individual>* members;
        const char* expected_deleted;
        double expected_gnp, expected_gnt;
    };
    const Population populations[] = {{"P", &p, "x2", 21.0, 41.0}, {"P'", &p_prime, "x0", 12.0, 24.0}};

    std::vector<SpookyCase> out;
    for (auto kind : {StrategyKind::Lsnf, StrategyKind::NsgaNf, StrategyKind::Nslc}) {
        auto strategy = RankingStrategy::make(kind, 3);
        strategy.novelty.k = 2;
        strategy.novelty.use_archive = false;
        for (const auto& pop : populations) {
            const auto selection = select_survivors(strategy, *pop.members, 3, {}, 0.0);
            std::vector<Individual> survivors;
            for (auto i : selection.survivors) survivors.push_back((*pop.members)[i]);
            SpookyCase c;
            c.strategy = std::string(strategy_label(kind));
            c.population = pop.name;
            for (auto id : selection.deleted) c.deleted += (c.deleted.empty() ? "x" : ",x") + std::to_string(id);
            c.expected_deleted = pop.expected_deleted;
            c.gnp = gnp(survivors);
            c.gnt = gnt(survivors);
            c.expected_gnp = pop.expected_gnp;
            c.expected_gnt = pop.expected_gnt;
            out.push_back(c);
        }
    }
    return out;
}

int cmd_spooky(std::ostream& out) {
    Table table;
    table.row({"strategy", "population", "deleted", "GNP", "GNT", "expected", "status"});
    bool ok = true;
    for (const auto& c : spooky_cases()) {
        ok = ok && c.matches();
        table.row({c.strategy, c.population, c.deleted, format_double(c.gnp), format_double(c.gnt),
                   c.expected_deleted + " " + format_double(c.expected_gnp) + " " + format_double(c.expected_gnt),
                   c.matches() ? "ok" : "MISMATCH"});
    }
    table.print(out);
    return ok ? kExitOk : kExitSpookyMismatch;
}

}  // namespace bdom::cli
