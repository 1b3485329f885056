#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bdom/core.hpp"

namespace bdom {

/// Mean distance from pool[index] to its k nearest behaviors among the other
/// pool members and the archive. Averages over everything available when fewer
/// than k neighbors exist. Throws DegenerateInput if there are none.
double novelty_score(std::size_t index, std::span<const Individual> pool,
                     std::span<const Behavior> archive, std::size_t k);

/// novelty_score for every pool member.
std::vector<double> novelty_scores(std::span<const Individual> pool, std::span<const Behavior> archive,
                                   std::size_t k);

/// Number of each member's k behavior-nearest pool neighbors with strictly
/// lower fitness.
std::vector<double> local_competition_scores(std::span<const Individual> pool, std::size_t k);

}  // namespace bdom
