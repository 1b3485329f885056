#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bdom/bdma.hpp"
#include "bdom/domination.hpp"
#include "bdom/map_elites.hpp"
#include "bdom/nsga2.hpp"
#include "bdom/strategy.hpp"
#include "support.hpp"

using namespace bdom;
using test::ind;

namespace {

std::vector<Individual> random_pool(Rng& rng, std::size_t n, std::size_t dims, bool coarse) {
    std::uniform_real_distribution<double> f(0.0, 20.0), b(0.0, 10.0);
    std::vector<Individual> pool;
    for (std::size_t i = 0; i < n; ++i) {
        Behavior behavior(dims);
        for (auto& v : behavior) v = coarse ? std::round(b(rng)) : b(rng);
        pool.emplace_back(i, coarse ? std::round(f(rng)) : f(rng), behavior);
    }
    return pool;
}

}  // namespace

TEST_CASE("behavior domination is a partial order") {
    Rng rng(21);
    for (int t = 0; t < 300; ++t) {
        const auto pool = random_pool(rng, 3, 1 + t % 3, t % 2 == 0);
        const double w = std::uniform_real_distribution<double>(0.01, 4.0)(rng);
        const ScaledDomination rel(w);
        const auto &x = pool[0], &y = pool[1], &z = pool[2];
        CHECK(rel.dominates(x, x));
        CHECK_FALSE(rel.strictly_dominates(x, x));
        if (rel.dominates(x, y) && rel.dominates(y, z)) CHECK(rel.dominates(x, z));
        if (rel.strictly_dominates(x, y) && rel.strictly_dominates(y, z)) CHECK(rel.strictly_dominates(x, z));
        if (rel.strictly_dominates(x, y)) CHECK_FALSE(rel.strictly_dominates(y, x));
        if (rel.dominates(x, y) && rel.dominates(y, x)) {
            CHECK(x.fitness() == y.fitness());
            CHECK(rel.distance(x, y) == 0.0);
        }
    }
}

TEST_CASE("fast non-dominated sort matches repeated peeling") {
    Rng rng(22);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + t % 30;
        const auto pool = random_pool(rng, n, 1 + t % 2, t % 3 == 0);
        const ScaledDomination rel(std::uniform_real_distribution<double>(0.05, 3.0)(rng));
        const auto strict = [&](std::size_t i, std::size_t j) { return rel.strictly_dominates(pool[i], pool[j]); };
        const auto fronts = behavior_fronts(pool, rel);
        CHECK(fronts == test::peel_fronts(n, strict));

        std::size_t total = 0;
        for (const auto& front : fronts) {
            total += front.members.size();
            for (auto a : front.members)
                for (auto b : front.members) CHECK_FALSE(strict(a, b));
            if (front.rank > 0)
                for (auto j : front.members) {
                    bool covered = false;
                    for (auto i : fronts[front.rank - 1].members) covered = covered || strict(i, j);
                    CHECK(covered);
                }
        }
        CHECK(total == n);

        std::vector<ObjectivePair> objectives(n);
        for (std::size_t i = 0; i < n; ++i) objectives[i] = {pool[i].fitness(), pool[i].behavior()[0]};
        const auto pareto = [&](std::size_t i, std::size_t j) { return pareto_dominates(objectives[i], objectives[j]); };
        CHECK(pareto_fronts(objectives) == test::peel_fronts(n, pareto));
    }
}

TEST_CASE("with a constant behavior the fronts are the fitness levels") {
    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
        std::vector<Individual> pool;
        std::uniform_int_distribution<int> f(0, 6);
        for (std::uint64_t i = 0; i < 15; ++i) pool.push_back(ind(i, f(rng), 0.0));
        const auto fronts = behavior_fronts(pool, ScaledDomination(1.0));
        std::vector<double> levels;
        for (const auto& x : pool) levels.push_back(x.fitness());
        std::sort(levels.begin(), levels.end(), std::greater<>());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        REQUIRE(fronts.size() == levels.size());
        for (const auto& front : fronts)
            for (auto i : front.members) CHECK(pool[i].fitness() == levels[front.rank]);
    }
}

TEST_CASE("under a bin metric the first front holds the bin elites") {
    Rng rng(24);
    std::uniform_real_distribution<double> b(0.0, 12.0);
    std::uniform_int_distribution<int> f(0, 9);
    const double big = 1e6;
    for (int t = 0; t < 100; ++t) {
        std::vector<Individual> pool;
        for (std::uint64_t i = 0; i < 25; ++i) pool.push_back(ind(i, f(rng), b(rng)));
        // Distance 0 inside a bin and `big` across bins.
        const auto strict = [&](std::size_t i, std::size_t j) {
            const bool same_bin = std::floor(pool[i].behavior()[0]) == std::floor(pool[j].behavior()[0]);
            return strictly_dominates(pool[i].fitness(), pool[j].fitness(), same_bin ? 0.0 : big);
        };
        const auto fronts = fast_nondominated_sort(pool.size(), strict);

        EliteMap map(1.0);
        for (const auto& x : pool) map.offer(x);
        for (const auto& elite : map.elites()) {
            const auto it = std::find_if(pool.begin(), pool.end(), [&](const Individual& x) { return x.id() == elite.id(); });
            const auto index = static_cast<std::size_t>(it - pool.begin());
            CHECK(std::count(fronts[0].members.begin(), fronts[0].members.end(), index) == 1);
        }
        for (auto i : fronts[0].members) {
            const Individual* elite = map.elite_at(map.bin_of(pool[i].behavior()));
            REQUIRE(elite != nullptr);
            CHECK(elite->fitness() == pool[i].fitness());
        }
    }
}

TEST_CASE("a non-dominated survivor stays non-dominated when a dominated offspring joins") {
    Rng rng(25);
    for (int t = 0; t < 200; ++t) {
        auto pool = random_pool(rng, 12, 1, false);
        const ScaledDomination rel(1.0);
        const auto before = behavior_fronts(pool, rel)[0].members;
        const Individual& anchor = pool[before.front()];
        pool.push_back(Individual(100, anchor.fitness() - 1.5, Behavior{anchor.behavior()[0] + 0.5}));
        const auto after = behavior_fronts(pool, rel)[0].members;
        for (auto i : before) CHECK(std::count(after.begin(), after.end(), i) == 1);
        CHECK(std::count(after.begin(), after.end(), pool.size() - 1) == 0);
    }
}

TEST_CASE("adapted w keeps both ends of the widest pair non-dominated") {
    Rng rng(26);
    for (int t = 0; t < 300; ++t) {
        const auto pool = random_pool(rng, 2 + t % 20, 1 + t % 3, t % 2 == 0);
        const auto [a, b] = most_distant_pair(pool);
        const double w = bdma2a_adapt_w(pool, 0.25);
        CHECK(w > 0.0);
        const ScaledDomination rel(w);
        bool zero_distance_fitter = false;
        for (const auto& x : pool)
            for (auto end : {a, b})
                zero_distance_fitter = zero_distance_fitter ||
                    (x.fitness() > pool[end].fitness() && l2_distance(x.behavior(), pool[end].behavior()) == 0.0);
        if (zero_distance_fitter) continue;
        for (const auto& x : pool) {
            CHECK_FALSE(rel.strictly_dominates(x, pool[a]));
            CHECK_FALSE(rel.strictly_dominates(x, pool[b]));
        }
    }
}

TEST_CASE("every strategy keeps capacity distinct survivors") {
    Rng rng(27);
    for (StrategyKind kind : kAllStrategies) {
        if (kind == StrategyKind::MapElites) continue;
        CAPTURE(strategy_name(kind));
        for (int t = 0; t < 40; ++t) {
            const auto pool = random_pool(rng, 21, 1 + t % 2, t % 2 == 0);
            auto strategy = RankingStrategy::make(kind, 20, 1.0);
            const auto sel = select_survivors(strategy, pool, 20, {}, 1.0);
            CHECK(sel.survivors.size() == 20);
            CHECK(std::is_sorted(sel.survivors.begin(), sel.survivors.end()));
            CHECK(std::adjacent_find(sel.survivors.begin(), sel.survivors.end()) == sel.survivors.end());
            CHECK(sel.deleted.size() == 1);
        }
    }
}
