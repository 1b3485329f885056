#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "bdom/core.hpp"
#include "bdom/domination.hpp"

namespace bdom::test {

inline Individual ind(std::uint64_t id, double fitness, double behavior) {
    return Individual(id, fitness, Behavior{behavior});
}

inline std::vector<Individual> line_population(std::initializer_list<std::pair<double, double>> behavior_fitness) {
    std::vector<Individual> out;
    std::uint64_t id = 0;
    for (const auto& [b, f] : behavior_fitness) out.push_back(ind(id++, f, b));
    return out;
}

inline std::set<std::uint64_t> ids_of(const std::vector<Individual>& pool, const std::vector<std::size_t>& indices) {
    std::set<std::uint64_t> out;
    for (auto i : indices) out.insert(pool[i].id());
    return out;
}

/// Brute-force fronts: repeatedly peel off the items nobody remaining dominates.
template <class Dominates>
std::vector<Front> peel_fronts(std::size_t n, Dominates&& dominates) {
    std::vector<bool> removed(n, false);
    std::vector<Front> fronts;
    std::size_t left = n;
    while (left > 0) {
        Front f;
        f.rank = fronts.size();
        for (std::size_t j = 0; j < n; ++j) {
            if (removed[j]) continue;
            bool dominated = false;
            for (std::size_t i = 0; i < n && !dominated; ++i)
                dominated = !removed[i] && i != j && dominates(i, j);
            if (!dominated) f.members.push_back(j);
        }
        for (auto j : f.members) removed[j] = true;
        left -= f.members.size();
        fronts.push_back(std::move(f));
    }
    return fronts;
}

}  // namespace bdom::test
