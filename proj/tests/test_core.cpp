#include <doctest.h>

#include <algorithm>
#include <random>

#include "bdom/core.hpp"
#include "support.hpp"

using namespace bdom;

TEST_CASE("l2_distance examples") {
    CHECK(l2_distance(std::vector{0.0}, std::vector{0.0}) == 0.0);
    CHECK(l2_distance(std::vector{0.0}, std::vector{10.0}) == 10.0);
    CHECK(l2_distance(std::vector{3.0, 4.0}, std::vector{0.0, 0.0}) == 5.0);
    CHECK_THROWS_AS(l2_distance(std::vector{1.0}, std::vector{1.0, 2.0}), ConfigError);
}

TEST_CASE("l2_distance satisfies the metric axioms") {
    Rng rng(7);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    std::uniform_int_distribution<int> dims(1, 6);
    for (int t = 0; t < 10'000; ++t) {
        const int n = dims(rng);
        std::vector<double> a(n), b(n), c(n);
        for (int i = 0; i < n; ++i) a[i] = u(rng), b[i] = u(rng), c[i] = u(rng);
        const double ab = l2_distance(a, b), ba = l2_distance(b, a);
        CHECK(ab >= 0.0);
        CHECK(ab == ba);
        CHECK(l2_distance(a, a) == 0.0);
        if (a != b) CHECK(ab > 0.0);
        CHECK(l2_distance(a, c) <= ab + l2_distance(b, c) + 1e-9);
    }
}

TEST_CASE("k_nearest examples") {
    const std::vector<Behavior> pool{{10.0}, {11.0}, {21.0}};
    auto near = k_nearest(std::vector{0.0}, pool, 2);
    REQUIRE(near.size() == 2);
    CHECK(near[0].distance == 10.0);
    CHECK(near[1].distance == 11.0);

    near = k_nearest(std::vector{11.0}, std::vector<Behavior>{{0.0}, {10.0}, {21.0}}, 2);
    REQUIRE(near.size() == 2);
    CHECK(near[0].distance == 1.0);
    CHECK(near[1].distance == 10.0);

    near = k_nearest(std::vector{5.0}, std::vector<Behavior>{{5.0}}, 3);
    REQUIRE(near.size() == 1);
    CHECK(near[0].distance == 0.0);

    CHECK(k_nearest(std::vector{5.0}, std::vector<Behavior>{}, 3).empty());
}

TEST_CASE("k_nearest ties go to the smaller pool index") {
    const std::vector<Behavior> pool{{2.0}, {-2.0}, {2.0}};
    const auto near = k_nearest(std::vector{0.0}, pool, 2);
    CHECK(near[0] == Neighbor{2.0, 0});
    CHECK(near[1] == Neighbor{2.0, 1});
}

TEST_CASE("k_nearest is a prefix of the full sorted list") {
    Rng rng(11);
    std::uniform_real_distribution<double> u(0.0, 20.0);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 256)(rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 300)(rng);
        std::vector<Behavior> pool(n);
        for (auto& b : pool) b = {std::round(u(rng)), std::round(u(rng))};
        const Behavior target{u(rng), u(rng)};
        std::vector<Neighbor> all;
        for (std::size_t i = 0; i < n; ++i) all.push_back({l2_distance(target, pool[i]), i});
        std::sort(all.begin(), all.end(),
                  [](const Neighbor& a, const Neighbor& b) { return std::tie(a.distance, a.index) < std::tie(b.distance, b.index); });
        all.resize(std::min(k, n));
        CHECK(k_nearest(target, pool, k) == all);
    }
}

TEST_CASE("genomes are clamped into the gene range") {
    const Genome g({-3.0, 75.0, 151.0});
    CHECK(g[0] == kGeneMin);
    CHECK(g[1] == 75.0);
    CHECK(g[2] == kGeneMax);
}

TEST_CASE("individual keeps its evaluation") {
    const Individual x(3, Genome({1.0, 2.0}), Evaluation{4.5, {7.0}});
    CHECK(x.id() == 3);
    CHECK(x.fitness() == 4.5);
    CHECK(x.behavior() == Behavior{7.0});
    CHECK(x.genome() == Genome({1.0, 2.0}));
}

TEST_CASE("archive admission") {
    Rng rng(1);
    SUBCASE("p_add = 0 never grows") {
        NoveltyArchive a(0.0);
        for (int i = 0; i < 1000; ++i) CHECK_FALSE(a.maybe_add({1.0}, rng));
        CHECK(a.size() == 0);
    }
    SUBCASE("p_add = 1 grows by one per call") {
        NoveltyArchive a(1.0);
        for (int i = 0; i < 100; ++i) a.maybe_add({double(i)}, rng);
        CHECK(a.size() == 100);
        CHECK(a.behaviors()[42] == Behavior{42.0});
    }
    SUBCASE("p_add = 0.01 over 10,000 calls") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Rng r(seed);
            NoveltyArchive a(0.01);
            for (int i = 0; i < 10'000; ++i) a.maybe_add({0.0}, r);
            CHECK(a.size() >= 50);
            CHECK(a.size() <= 160);
        }
    }
    CHECK_THROWS_AS(NoveltyArchive(1.5), ConfigError);
    CHECK_THROWS_AS(NoveltyArchive(-0.1), ConfigError);
}

TEST_CASE("order_by_score puts the youngest of a tie last") {
    const auto pool = test::line_population({{0, 1}, {1, 1}, {2, 1}});
    const std::vector<double> scores{1.0, 3.0, 1.0};
    CHECK(order_by_score(pool, scores) == std::vector<std::size_t>{1, 0, 2});
}
