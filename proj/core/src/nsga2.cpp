#include "bdom/nsga2.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace bdom {

std::vector<Front> pareto_fronts(std::span<const ObjectivePair> objectives) {
    return fast_nondominated_sort(objectives.size(), [&](std::size_t i, std::size_t j) {
        return pareto_dominates(objectives[i], objectives[j]);
    });
}

std::vector<double> crowding_distances(std::span<const ObjectivePair> objectives, const Front& front) {
    const std::size_t m = front.members.size();
    std::vector<double> crowding(m, 0.0);
    if (m <= 2) {
        std::fill(crowding.begin(), crowding.end(), std::numeric_limits<double>::infinity());
        return crowding;
    }
    std::vector<std::size_t> order(m);
    for (std::size_t obj = 0; obj < 2; ++obj) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return objectives[front.members[a]][obj] < objectives[front.members[b]][obj];
        });
        const double lo = objectives[front.members[order.front()]][obj];
        const double hi = objectives[front.members[order.back()]][obj];
        crowding[order.front()] = std::numeric_limits<double>::infinity();
        crowding[order.back()] = std::numeric_limits<double>::infinity();
        if (hi <= lo) continue;
        for (std::size_t r = 1; r + 1 < m; ++r) {
            const double prev = objectives[front.members[order[r - 1]]][obj];
            const double next = objectives[front.members[order[r + 1]]][obj];
            crowding[order[r]] += (next - prev) / (hi - lo);
        }
    }
    return crowding;
}

std::vector<std::size_t> nsga2_order(std::span<const Individual> pool,
                                     std::span<const ObjectivePair> objectives) {
    if (pool.size() != objectives.size()) throw ConfigError("nsga2_order: size mismatch");
    std::vector<std::size_t> rank(pool.size());
    std::vector<double> crowding(pool.size());
    for (const auto& front : pareto_fronts(objectives)) {
        const auto cd = crowding_distances(objectives, front);
        for (std::size_t m = 0; m < front.members.size(); ++m) {
            rank[front.members[m]] = front.rank;
            crowding[front.members[m]] = cd[m];
        }
    }
    std::vector<std::size_t> order(pool.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (rank[a] != rank[b]) return rank[a] < rank[b];
        if (crowding[a] != crowding[b]) return crowding[a] > crowding[b];
        return pool[a].id() < pool[b].id();
    });
    return order;
}

}  // namespace bdom
