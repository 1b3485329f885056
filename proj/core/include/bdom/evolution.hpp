#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bdom/core.hpp"
#include "bdom/domains.hpp"
#include "bdom/map_elites.hpp"
#include "bdom/metrics.hpp"
#include "bdom/strategy.hpp"

namespace bdom {

struct EAParams {
    std::size_t population_size = 20;
    std::size_t offspring_per_iteration = 1;
    double crossover_probability = 1.0;
    double mutation_sigma = 1.0;
    std::uint64_t iterations = 10'000;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Each gene copied from either parent with probability 1/2.
Genome uniform_crossover(const Genome& first, const Genome& second, Rng& rng);

/// Adds N(0, sigma^2) to every gene, then clamps into the gene range.
Genome gaussian_mutate(const Genome& genome, double sigma, Rng& rng);

/// Random genomes with genes ~ U[0, 1), evaluated in order, ids 0..n-1.
std::vector<Individual> initialize_population(const Domain& domain, std::size_t size, Rng& rng);

struct RunConfig {
    std::string domain = "four_peaks";
    DomainOptions domain_options;
    RankingStrategy strategy;
    EAParams ea;
    std::optional<double> mutation_sigma;  // domain default when unset
    std::optional<double> w;               // BDMA-2 scale; domain default when unset

    /// Applies the domain defaults, validates everything, and returns the
    /// domain instance. Throws ConfigError before any work is done.
    std::unique_ptr<Domain> resolve();
};

/// Called once per iteration with the ranked pool (population + offspring)
/// and the domination scale used to rank it.
using PoolObserver = std::function<void(std::span<const Individual> pool, double w)>;

/// Mutable state of one steady-state run. Owned by a single thread.
class RunState {
public:
    RunState(const Domain& domain, RankingStrategy strategy, EAParams params);

    /// Parent selection, variation, evaluation, archiving, replacement and
    /// metric recording for one iteration.
    void step(const PoolObserver& observer = {});

    [[nodiscard]] const Population& population() const noexcept { return population_; }
    [[nodiscard]] const NoveltyArchive& archive() const noexcept { return archive_; }
    [[nodiscard]] const EliteMap* elites() const noexcept { return elites_ ? &*elites_ : nullptr; }
    [[nodiscard]] std::uint64_t iteration() const noexcept { return iteration_; }
    [[nodiscard]] std::uint64_t evaluations() const noexcept { return next_id_; }
    [[nodiscard]] double current_w() const noexcept { return w_; }
    [[nodiscard]] const RunLog& log() const noexcept { return log_; }
    [[nodiscard]] const CullDiagnostics& last_diagnostics() const noexcept { return last_; }

    RunLog take_log() &&;

private:
    Individual spawn(Genome genome);
    void record();

    const Domain& domain_;
    RankingStrategy strategy_;
    EAParams params_;
    Rng rng_;
    Population population_;
    NoveltyArchive archive_;
    std::optional<EliteMap> elites_;
    BinTracker bins_;
    std::uint64_t iteration_ = 0;
    std::uint64_t next_id_ = 0;
    double w_ = 0.0;
    double best_fitness_;
    CullDiagnostics last_;
    RunLog log_;
};

/// Runs `config.ea.iterations` steps and returns the full per-iteration log.
RunLog run(RunConfig config, const PoolObserver& observer = {});

}  // namespace bdom
