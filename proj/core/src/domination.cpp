#include "bdom/domination.hpp"

#include <string>

namespace bdom {

ScaledDomination::ScaledDomination(double w) : w_(w) {
    if (!(w > 0.0)) throw ConfigError("domination scale w must be positive, got " + std::to_string(w));
}

double ScaledDomination::distance(const Individual& x, const Individual& y) const {
    return w_ * l2_distance(x.behavior(), y.behavior());
}

double ScaledDomination::effect(const Individual& x, const Individual& y) const {
    return domination_effect(x.fitness(), y.fitness(), distance(x, y));
}

bool ScaledDomination::dominates(const Individual& x, const Individual& y) const {
    return bdom::dominates(x.fitness(), y.fitness(), distance(x, y));
}

bool ScaledDomination::strictly_dominates(const Individual& x, const Individual& y) const {
    return bdom::strictly_dominates(x.fitness(), y.fitness(), distance(x, y));
}

std::vector<Front> behavior_fronts(std::span<const Individual> pool, const ScaledDomination& relation) {
    return fast_nondominated_sort(pool.size(), [&](std::size_t i, std::size_t j) {
        return relation.strictly_dominates(pool[i], pool[j]);
    });
}

}  // namespace bdom
