#include "bdom/metrics.hpp"

#include <algorithm>

namespace bdom {
namespace {

void require_pair(std::span<const Individual> population) {
    if (population.size() < 2) throw DegenerateInput("global novelty needs at least two individuals");
}

}  // namespace

double gnp(std::span<const Individual> population) {
    require_pair(population);
    double best = 0.0;
    for (std::size_t i = 0; i < population.size(); ++i)
        for (std::size_t j = i + 1; j < population.size(); ++j)
            best = std::max(best, l2_distance(population[i].behavior(), population[j].behavior()));
    return best;
}

double gnt(std::span<const Individual> population) {
    require_pair(population);
    double total = 0.0;
    for (std::size_t i = 0; i < population.size(); ++i)
        for (std::size_t j = i + 1; j < population.size(); ++j)
            total += l2_distance(population[i].behavior(), population[j].behavior());
    return total;
}

BinTracker::BinTracker(std::vector<BinInterval> bins) : bins_(std::move(bins)), best_(bins_.size(), 0.0) {
    for (std::size_t i = 0; i < bins_.size(); ++i) {
        if (bins_[i].low > bins_[i].high) throw ConfigError("bin interval has low > high");
        for (std::size_t j = i + 1; j < bins_.size(); ++j)
            if (bins_[i].low <= bins_[j].high && bins_[j].low <= bins_[i].high)
                throw ConfigError("bin intervals must be disjoint");
    }
}

void BinTracker::observe(const Individual& individual) {
    if (individual.behavior().empty()) return;
    const double b = individual.behavior()[0];
    for (std::size_t i = 0; i < bins_.size(); ++i)
        if (bins_[i].contains(b)) best_[i] = std::max(best_[i], individual.fitness());
}

BinScores BinTracker::scores(std::span<const Individual> population) const {
    std::vector<double> current(bins_.size(), 0.0);
    for (const auto& ind : population) {
        if (ind.behavior().empty()) continue;
        const double b = ind.behavior()[0];
        for (std::size_t i = 0; i < bins_.size(); ++i)
            if (bins_[i].contains(b)) current[i] = std::max(current[i], ind.fitness());
    }
    BinScores out;
    for (std::size_t i = 0; i < bins_.size(); ++i) {
        out.total += best_[i];
        out.current += current[i];
    }
    return out;
}

}  // namespace bdom
