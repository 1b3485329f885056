#pragma once

#include <array>
#include <span>
#include <vector>

#include "bdom/core.hpp"
#include "bdom/domination.hpp"

namespace bdom {

/// Two maximized objectives, e.g. (fitness, novelty) or
/// (local competition, novelty).
using ObjectivePair = std::array<double, 2>;

/// Standard maximizing Pareto dominance: no worse in both, better in one.
constexpr bool pareto_dominates(const ObjectivePair& a, const ObjectivePair& b) noexcept {
    return a[0] >= b[0] && a[1] >= b[1] && (a[0] > b[0] || a[1] > b[1]);
}

std::vector<Front> pareto_fronts(std::span<const ObjectivePair> objectives);

/// Crowding distance of each member of `front`, aligned with front.members.
/// Boundary members of either objective get +infinity.
std::vector<double> crowding_distances(std::span<const ObjectivePair> objectives, const Front& front);

/// Pool indices best-first by (front rank ascending, crowding distance
/// descending, id ascending). The last entry is the one NSGA-II deletes.
std::vector<std::size_t> nsga2_order(std::span<const Individual> pool,
                                     std::span<const ObjectivePair> objectives);

}  // namespace bdom
