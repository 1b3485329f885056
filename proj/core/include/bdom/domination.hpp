#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "bdom/core.hpp"

namespace bdom {

/// e(x, y) = f(x) - f(y) - d: how strongly x suppresses y given their
/// behavior distance d.
constexpr double domination_effect(double fitness_x, double fitness_y, double distance) noexcept {
    return fitness_x - fitness_y - distance;
}

/// Behavior domination: x dominates y iff e(x, y) >= 0. Reflexive.
constexpr bool dominates(double fitness_x, double fitness_y, double distance) noexcept {
    return domination_effect(fitness_x, fitness_y, distance) >= 0.0;
}

/// Strict part of behavior domination: x dominates y and y does not dominate x.
/// Individuals with equal fitness at zero distance are mutually non-dominated.
constexpr bool strictly_dominates(double fitness_x, double fitness_y, double distance) noexcept {
    return dominates(fitness_x, fitness_y, distance) && !dominates(fitness_y, fitness_x, distance);
}

/// Behavior domination with the w-scaled L2 distance.
class ScaledDomination {
public:
    explicit ScaledDomination(double w);

    [[nodiscard]] double w() const noexcept { return w_; }
    [[nodiscard]] double distance(const Individual& x, const Individual& y) const;
    [[nodiscard]] double effect(const Individual& x, const Individual& y) const;
    [[nodiscard]] bool dominates(const Individual& x, const Individual& y) const;
    [[nodiscard]] bool strictly_dominates(const Individual& x, const Individual& y) const;

private:
    double w_;
};

struct Front {
    std::size_t rank = 0;
    std::vector<std::size_t> members;

    bool operator==(const Front&) const = default;
};

/// Non-dominated sorting over n items. `dominates(i, j)` must be a strict
/// partial order (irreflexive, transitive). Front 0 holds items dominated by
/// nobody; front r holds items dominated only by members of earlier fronts.
/// Members inside each front are in ascending index order.
template <class Dominates>
std::vector<Front> fast_nondominated_sort(std::size_t n, Dominates&& dominates) {
    std::vector<std::vector<std::size_t>> dominated_by(n);
    std::vector<std::size_t> domination_count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(i, j)) {
                dominated_by[i].push_back(j);
                ++domination_count[j];
            } else if (dominates(j, i)) {
                dominated_by[j].push_back(i);
                ++domination_count[i];
            }
        }
    }

    std::vector<Front> fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i)
        if (domination_count[i] == 0) current.push_back(i);

    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : current) {
            for (std::size_t j : dominated_by[i])
                if (--domination_count[j] == 0) next.push_back(j);
        }
        fronts.push_back({fronts.size(), std::move(current)});
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }
    return fronts;
}

/// Fronts of `pool` under strict w-scaled behavior domination.
std::vector<Front> behavior_fronts(std::span<const Individual> pool, const ScaledDomination& relation);

}  // namespace bdom
