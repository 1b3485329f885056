#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bdom/core.hpp"
#include "bdom/domination.hpp"

namespace bdom {

struct DominationParams {
    double w = 1.0;              // behavior-distance scale
    std::size_t dom_slots = 10;  // survivors chosen by non-dominated sorting
    std::size_t nov_slots = 10;  // survivors chosen by novelty alone

    /// Even split of `capacity` between the two phases.
    static DominationParams split(double w, std::size_t capacity);
    void validate(std::size_t capacity) const;
};

struct Bdma2Selection {
    std::vector<std::size_t> by_domination;  // pool indices kept by phase 1
    std::vector<std::size_t> by_novelty;     // pool indices kept by phase 2
    std::vector<std::size_t> discarded;

    /// All kept pool indices in ascending order.
    [[nodiscard]] std::vector<std::size_t> survivors() const;
};

/// Shrinks `members` (pool indices) to `keep` entries by repeatedly finding
/// the behavior-nearest pair and dropping its less fit member (the larger id
/// on equal fitness).
void thin_front(std::span<const Individual> pool, std::vector<std::size_t>& members, std::size_t keep);

/// BDMA-2 survivor selection. Phase 1 fills dom_slots front by front under
/// strict w-scaled behavior domination, thinning the first front that does
/// not fit. Phase 2 fills the remaining slots from the leftovers by
/// descending novelty (k nearest within the pool, no archive).
Bdma2Selection bdma2_select(std::span<const Individual> pool, const DominationParams& params, std::size_t k);

/// The pair of pool indices at maximum behavior distance. Ties go to the
/// lexicographically smallest (min id, max id) pair. Requires |pool| >= 2.
std::pair<std::size_t, std::size_t> most_distant_pair(std::span<const Individual> pool);

/// Online w for BDMA-2a: just above the largest fitness-gap / distance ratio
/// of any fitter individual over either endpoint of the most distant pair,
/// so neither endpoint is dominated. Returns previous_w when no fitter
/// individual exists or when a fitter one sits at zero distance.
double bdma2a_adapt_w(std::span<const Individual> pool, double previous_w);

inline constexpr double kAdaptMargin = 1e-9;
inline constexpr double kInitialAdaptiveW = 1.0;

}  // namespace bdom
