#include "bdom/novelty.hpp"

#include <numeric>
#include <string>

namespace bdom {
namespace {

// Candidates are the other pool members (in pool order) followed by the
// archive, so ties resolve toward pool members first.
std::vector<Neighbor> neighbors_of(std::size_t index, std::span<const Individual> pool,
                                   std::span<const Behavior> archive, std::size_t k) {
    if (k == 0) throw ConfigError("k must be positive");
    const auto& self = pool[index].behavior();
    std::vector<Neighbor> candidates;
    candidates.reserve(pool.size() + archive.size());
    std::size_t slot = 0;
    for (std::size_t j = 0; j < pool.size(); ++j) {
        if (j == index) continue;
        candidates.push_back({l2_distance(self, pool[j].behavior()), slot++});
    }
    for (const auto& b : archive) candidates.push_back({l2_distance(self, b), slot++});
    keep_nearest(candidates, k);
    return candidates;
}

}  // namespace

double novelty_score(std::size_t index, std::span<const Individual> pool,
                     std::span<const Behavior> archive, std::size_t k) {
    if (index >= pool.size()) throw ConfigError("novelty_score: index out of range");
    const auto nearest = neighbors_of(index, pool, archive, k);
    if (nearest.empty())
        throw DegenerateInput("novelty is undefined without at least one other behavior");
    const double total = std::accumulate(nearest.begin(), nearest.end(), 0.0,
                                         [](double acc, const Neighbor& n) { return acc + n.distance; });
    return total / static_cast<double>(nearest.size());
}

std::vector<double> novelty_scores(std::span<const Individual> pool, std::span<const Behavior> archive,
                                   std::size_t k) {
    std::vector<double> out(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) out[i] = novelty_score(i, pool, archive, k);
    return out;
}

std::vector<double> local_competition_scores(std::span<const Individual> pool, std::size_t k) {
    std::vector<double> out(pool.size(), 0.0);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const auto nearest = neighbors_of(i, pool, {}, k);
        int beaten = 0;
        for (const auto& n : nearest) {
            // slots skip i itself
            const std::size_t j = n.index < i ? n.index : n.index + 1;
            if (pool[j].fitness() < pool[i].fitness()) ++beaten;
        }
        out[i] = beaten;
    }
    return out;
}

}  // namespace bdom
