#include "bdom/map_elites.hpp"

#include <cmath>
#include <string>

namespace bdom {

EliteMap::EliteMap(double bin_width) : bin_width_(bin_width) {
    if (!(bin_width > 0.0)) throw ConfigError("bin width must be positive, got " + std::to_string(bin_width));
}

BinKey EliteMap::bin_of(const Behavior& behavior) const {
    BinKey key(behavior.size());
    for (std::size_t i = 0; i < behavior.size(); ++i)
        key[i] = static_cast<std::int64_t>(std::floor(behavior[i] / bin_width_));
    return key;
}

EliteMap::OfferResult EliteMap::offer(const Individual& candidate) {
    auto key = bin_of(candidate.behavior());
    auto it = bins_.find(key);
    if (it == bins_.end()) {
        bins_.emplace(std::move(key), candidate);
        return {true, std::nullopt};
    }
    if (candidate.fitness() > it->second.fitness()) {
        const auto displaced = it->second.id();
        it->second = candidate;
        return {true, displaced};
    }
    return {false, std::nullopt};
}

const Individual* EliteMap::elite_at(const BinKey& key) const {
    auto it = bins_.find(key);
    return it == bins_.end() ? nullptr : &it->second;
}

std::vector<Individual> EliteMap::elites() const {
    std::vector<Individual> out;
    out.reserve(bins_.size());
    for (const auto& [key, elite] : bins_) out.push_back(elite);
    return out;
}

}  // namespace bdom
