#include "bdom/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace bdom {

Genome::Genome(std::vector<double> genes) : genes_(std::move(genes)) {
    for (auto& g : genes_) g = std::clamp(g, kGeneMin, kGeneMax);
}

Individual::Individual(std::uint64_t id, Genome genome, Evaluation evaluation)
    : id_(id),
      genome_(std::move(genome)),
      fitness_(evaluation.fitness),
      behavior_(std::move(evaluation.behavior)) {}

Individual::Individual(std::uint64_t id, double fitness, Behavior behavior)
    : id_(id), fitness_(fitness), behavior_(std::move(behavior)) {}

NoveltyArchive::NoveltyArchive(double p_add) : p_add_(p_add) {
    if (!(p_add >= 0.0 && p_add <= 1.0))
        throw ConfigError("p_add must lie in [0, 1], got " + std::to_string(p_add));
}

bool NoveltyArchive::admit(Rng& rng) const {
    std::bernoulli_distribution coin(p_add_);
    return coin(rng);
}

void NoveltyArchive::add(Behavior behavior) { behaviors_.push_back(std::move(behavior)); }

bool NoveltyArchive::maybe_add(const Behavior& behavior, Rng& rng) {
    if (!admit(rng)) return false;
    add(behavior);
    return true;
}

double l2_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw ConfigError("behavior dimension mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

void keep_nearest(std::vector<Neighbor>& candidates, std::size_t k) {
    auto closer = [](const Neighbor& x, const Neighbor& y) {
        return x.distance < y.distance || (x.distance == y.distance && x.index < y.index);
    };
    if (k < candidates.size()) {
        std::nth_element(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k),
                         candidates.end(), closer);
        candidates.resize(k);
    }
    std::sort(candidates.begin(), candidates.end(), closer);
}

std::vector<Neighbor> k_nearest(std::span<const double> target, std::span<const Behavior> pool,
                                std::size_t k) {
    if (k == 0) throw ConfigError("k must be positive");
    std::vector<Neighbor> out;
    out.reserve(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) out.push_back({l2_distance(target, pool[i]), i});
    keep_nearest(out, k);
    return out;
}

std::vector<std::size_t> order_by_score(std::span<const Individual> pool, std::span<const double> scores) {
    if (pool.size() != scores.size()) throw ConfigError("order_by_score: size mismatch");
    std::vector<std::size_t> order(pool.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return pool[a].id() < pool[b].id();
    });
    return order;
}

}  // namespace bdom
