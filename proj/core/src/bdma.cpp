#include "bdom/bdma.hpp"

#include <algorithm>
#include <string>

#include "bdom/novelty.hpp"

namespace bdom {

DominationParams DominationParams::split(double w, std::size_t capacity) {
    return {w, capacity / 2, capacity - capacity / 2};
}

void DominationParams::validate(std::size_t capacity) const {
    if (!(w > 0.0)) throw ConfigError("w must be positive, got " + std::to_string(w));
    if (dom_slots + nov_slots != capacity)
        throw ConfigError("dom_slots + nov_slots must equal the population capacity (" +
                          std::to_string(dom_slots) + " + " + std::to_string(nov_slots) +
                          " != " + std::to_string(capacity) + ")");
}

std::vector<std::size_t> Bdma2Selection::survivors() const {
    std::vector<std::size_t> out(by_domination);
    out.insert(out.end(), by_novelty.begin(), by_novelty.end());
    std::sort(out.begin(), out.end());
    return out;
}

void thin_front(std::span<const Individual> pool, std::vector<std::size_t>& members, std::size_t keep) {
    while (members.size() > keep) {
        std::size_t best_a = 0;
        std::size_t best_b = 1;
        double best = l2_distance(pool[members[0]].behavior(), pool[members[1]].behavior());
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const double d = l2_distance(pool[members[a]].behavior(), pool[members[b]].behavior());
                if (d < best) {
                    best = d;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        const auto& x = pool[members[best_a]];
        const auto& y = pool[members[best_b]];
        bool drop_a = x.fitness() < y.fitness() || (x.fitness() == y.fitness() && x.id() > y.id());
        members.erase(members.begin() + static_cast<std::ptrdiff_t>(drop_a ? best_a : best_b));
    }
}

Bdma2Selection bdma2_select(std::span<const Individual> pool, const DominationParams& params, std::size_t k) {
    const std::size_t capacity = params.dom_slots + params.nov_slots;
    if (!(params.w > 0.0)) throw ConfigError("w must be positive");

    Bdma2Selection out;
    std::vector<bool> taken(pool.size(), false);

    for (const auto& front : behavior_fronts(pool, ScaledDomination(params.w))) {
        const std::size_t room = params.dom_slots - out.by_domination.size();
        if (room == 0) break;
        auto members = front.members;
        if (members.size() > room) thin_front(pool, members, room);
        for (auto i : members) {
            out.by_domination.push_back(i);
            taken[i] = true;
        }
    }

    // Slots phase 1 could not fill are handed to novelty.
    const std::size_t room = std::min(capacity, pool.size()) - out.by_domination.size();
    if (room > 0) {
        const auto novelty = novelty_scores(pool, {}, k);
        for (auto i : order_by_score(pool, novelty)) {
            if (out.by_novelty.size() == room) break;
            if (taken[i]) continue;
            out.by_novelty.push_back(i);
            taken[i] = true;
        }
    }

    for (std::size_t i = 0; i < pool.size(); ++i)
        if (!taken[i]) out.discarded.push_back(i);
    return out;
}

std::pair<std::size_t, std::size_t> most_distant_pair(std::span<const Individual> pool) {
    if (pool.size() < 2) throw DegenerateInput("most_distant_pair needs at least two individuals");
    auto id_pair = [&](std::size_t a, std::size_t b) {
        const auto x = pool[a].id();
        const auto y = pool[b].id();
        return x < y ? std::pair{x, y} : std::pair{y, x};
    };
    std::pair<std::size_t, std::size_t> best{0, 1};
    double best_d = l2_distance(pool[0].behavior(), pool[1].behavior());
    for (std::size_t a = 0; a < pool.size(); ++a) {
        for (std::size_t b = a + 1; b < pool.size(); ++b) {
            const double d = l2_distance(pool[a].behavior(), pool[b].behavior());
            if (d > best_d || (d == best_d && id_pair(a, b) < id_pair(best.first, best.second))) {
                best_d = d;
                best = {a, b};
            }
        }
    }
    return best;
}

double bdma2a_adapt_w(std::span<const Individual> pool, double previous_w) {
    const auto [u, v] = most_distant_pair(pool);
    double threshold = 0.0;
    bool any = false;
    for (std::size_t y : {u, v}) {
        for (std::size_t z = 0; z < pool.size(); ++z) {
            if (z == y) continue;
            const double gap = pool[z].fitness() - pool[y].fitness();
            if (!(gap > 0.0)) continue;
            const double d = l2_distance(pool[z].behavior(), pool[y].behavior());
            if (d == 0.0) return previous_w;
            threshold = std::max(threshold, gap / d);
            any = true;
        }
    }
    const double w = threshold * (1.0 + kAdaptMargin);
    return any && w > 0.0 ? w : previous_w;
}

}  // namespace bdom
