#include "bdom/evolution.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bdom/bdma.hpp"

namespace bdom {

void EAParams::validate() const {
    if (population_size < 2) throw ConfigError("population size must be at least 2");
    if (offspring_per_iteration < 1) throw ConfigError("at least one offspring per iteration is required");
    if (!(crossover_probability >= 0.0 && crossover_probability <= 1.0))
        throw ConfigError("crossover probability must lie in [0, 1]");
    if (!(mutation_sigma > 0.0)) throw ConfigError("mutation sigma must be positive");
}

Genome uniform_crossover(const Genome& first, const Genome& second, Rng& rng) {
    if (first.size() != second.size()) throw ConfigError("crossover parents differ in length");
    std::bernoulli_distribution coin(0.5);
    std::vector<double> child(first.size());
    for (std::size_t i = 0; i < child.size(); ++i) child[i] = coin(rng) ? second[i] : first[i];
    return Genome(std::move(child));
}

Genome gaussian_mutate(const Genome& genome, double sigma, Rng& rng) {
    if (!(sigma > 0.0)) throw ConfigError("mutation sigma must be positive");
    std::normal_distribution<double> noise(0.0, sigma);
    std::vector<double> genes(genome.genes().begin(), genome.genes().end());
    for (auto& g : genes) g += noise(rng);
    return Genome(std::move(genes));
}

std::vector<Individual> initialize_population(const Domain& domain, std::size_t size, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Individual> out;
    out.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        std::vector<double> genes(domain.genome_size());
        for (auto& g : genes) g = unit(rng);
        Genome genome(std::move(genes));
        auto evaluation = domain.evaluate(genome.genes(), rng);
        out.emplace_back(i, std::move(genome), std::move(evaluation));
    }
    return out;
}

std::unique_ptr<Domain> RunConfig::resolve() {
    auto instance = make_domain(domain, domain_options);
    ea.mutation_sigma = mutation_sigma.value_or(instance->default_mutation_sigma());
    ea.validate();
    const std::size_t capacity = ea.population_size;
    auto& dom = strategy.domination;
    if (dom.dom_slots + dom.nov_slots != capacity) dom = DominationParams::split(dom.w, capacity);
    dom.w = w.value_or(instance->default_domination_w());
    strategy.validate(capacity);
    return instance;
}

RunState::RunState(const Domain& domain, RankingStrategy strategy, EAParams params)
    : domain_(domain),
      strategy_(std::move(strategy)),
      params_(params),
      rng_(params.seed),
      archive_(strategy_.novelty.p_add),
      bins_(domain.bins()),
      best_fitness_(-std::numeric_limits<double>::infinity()) {
    params_.validate();
    strategy_.validate(params_.population_size);

    population_.capacity = params_.population_size;
    auto initial = initialize_population(domain_, params_.population_size, rng_);
    next_id_ = initial.size();
    for (const auto& ind : initial) {
        bins_.observe(ind);
        best_fitness_ = std::max(best_fitness_, ind.fitness());
    }
    if (strategy_.kind == StrategyKind::MapElites) {
        elites_.emplace(strategy_.bin_width);
        for (const auto& ind : initial) elites_->offer(ind);
        population_.members = elites_->elites();
    } else {
        population_.members = std::move(initial);
    }

    if (strategy_.kind == StrategyKind::Bdma2) w_ = strategy_.domination.w;
    if (strategy_.kind == StrategyKind::Bdma2a) w_ = kInitialAdaptiveW;
    record();
}

Individual RunState::spawn(Genome genome) {
    auto evaluation = domain_.evaluate(genome.genes(), rng_);
    Individual child(next_id_++, std::move(genome), std::move(evaluation));
    bins_.observe(child);
    best_fitness_ = std::max(best_fitness_, child.fitness());
    return child;
}

void RunState::step(const PoolObserver& observer) {
    const auto& parents = population_.members;
    std::uniform_int_distribution<std::size_t> pick(0, parents.size() - 1);
    std::bernoulli_distribution do_crossover(params_.crossover_probability);

    std::vector<Individual> offspring;
    std::vector<bool> archived;
    for (std::size_t n = 0; n < params_.offspring_per_iteration; ++n) {
        const auto& first = parents[pick(rng_)];
        const auto& second = parents[pick(rng_)];
        const bool cross = params_.crossover_probability >= 1.0 || do_crossover(rng_);
        Genome child = cross ? uniform_crossover(first.genome(), second.genome(), rng_) : first.genome();
        offspring.push_back(spawn(gaussian_mutate(child, params_.mutation_sigma, rng_)));
        // The admission draw happens now; the entry is added after ranking so
        // an offspring never counts its own archive copy as a neighbor.
        archived.push_back(strategy_.uses_archive() && archive_.admit(rng_));
    }

    std::vector<Individual> pool;
    if (observer) {
        pool = population_.members;
        pool.insert(pool.end(), offspring.begin(), offspring.end());
    }

    last_ = rank_and_cull(strategy_, population_, offspring, archive_, elites_ ? &*elites_ : nullptr, w_);
    if (strategy_.uses_domination()) w_ = last_.w;
    if (observer) observer(pool, w_);

    for (std::size_t n = 0; n < offspring.size(); ++n)
        if (archived[n]) archive_.add(offspring[n].behavior());

    ++iteration_;
    record();
}

void RunState::record() {
    const auto& members = population_.members;
    const auto scores = bins_.scores(members);
    LogRow row;
    row.iteration = iteration_;
    row.best_fitness = best_fitness_;
    row.total_bin_score = scores.total;
    row.current_bin_score = scores.current;
    row.gnp = members.size() >= 2 ? gnp(members) : 0.0;
    row.gnt = members.size() >= 2 ? gnt(members) : 0.0;
    row.w = w_;
    log_.rows.push_back(row);
}

RunLog RunState::take_log() && {
    log_.final_population = population_.members;
    return std::move(log_);
}

RunLog run(RunConfig config, const PoolObserver& observer) {
    const auto domain = config.resolve();
    RunState state(*domain, config.strategy, config.ea);
    for (std::uint64_t i = 0; i < config.ea.iterations; ++i) state.step(observer);
    return std::move(state).take_log();
}

}  // namespace bdom
