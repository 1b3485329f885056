#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "bdom/metrics.hpp"
#include "bdom/stats.hpp"
#include "support.hpp"

using namespace bdom;
using test::ind;

namespace {

std::vector<Individual> at(std::initializer_list<double> behaviors) {
    std::vector<Individual> out;
    std::uint64_t id = 0;
    for (double b : behaviors) out.push_back(ind(id++, 0, b));
    return out;
}

/// Exact p by enumerating every split of the pooled sample. The two-sided
/// value doubles the smaller tail.
double brute_force_p(const std::vector<double>& a, const std::vector<double>& b, Alternative alt) {
    std::vector<double> all(a);
    all.insert(all.end(), b.begin(), b.end());
    const auto u_of = [](const std::vector<double>& x, const std::vector<double>& y) {
        double u = 0;
        for (double xi : x)
            for (double yj : y) u += xi > yj ? 1.0 : (xi == yj ? 0.5 : 0.0);
        return u;
    };
    const double observed = u_of(a, b);
    const std::size_t n = all.size();
    std::size_t upper = 0, lower = 0, total = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != a.size()) continue;
        std::vector<double> x, y;
        for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1u ? x : y).push_back(all[i]);
        const double u = u_of(x, y);
        ++total;
        upper += u >= observed - 1e-9;
        lower += u <= observed + 1e-9;
    }
    const double up = static_cast<double>(upper) / static_cast<double>(total);
    const double low = static_cast<double>(lower) / static_cast<double>(total);
    if (alt == Alternative::Greater) return up;
    if (alt == Alternative::Less) return low;
    return std::min(1.0, 2 * std::min(up, low));
}

}  // namespace

TEST_CASE("GNP and GNT examples") {
    CHECK(gnp(at({0, 10, 21})) == 21);
    CHECK(gnt(at({0, 10, 21})) == 10 + 21 + 11);
    CHECK(gnp(at({10, 11, 22})) == 12);
    CHECK(gnt(at({10, 11, 22})) == 24);
    CHECK(gnp(at({3, 3, 3})) == 0);
    CHECK(gnt(at({0, 7.5})) == 7.5);
    CHECK_THROWS_AS(gnp(at({1})), DegenerateInput);
    CHECK_THROWS_AS(gnt(at({})), DegenerateInput);
}

TEST_CASE("GNT bounds GNP") {
    Rng rng(2);
    std::uniform_real_distribution<double> u(0, 100);
    for (int t = 0; t < 200; ++t) {
        std::vector<Individual> pop;
        for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(2 + t % 10); ++i) pop.push_back(ind(i, 0, u(rng)));
        CHECK(gnt(pop) >= gnp(pop));
    }
    CHECK(gnt(at({0, 5, 5})) == 10);
    CHECK(gnt(at({0, 0, 5})) == 10);
    CHECK(gnt(at({0, 0, 0, 5})) == 15);
    CHECK(gnt(at({0, 5})) == gnp(at({0, 5})));
}

TEST_CASE("bin scores") {
    const std::vector<BinInterval> bins{{5, 15}, {35, 45}, {65, 75}, {125, 135}};
    BinTracker tracker(bins);
    CHECK(tracker.scores({}).total == 0);

    std::vector<Individual> tops{ind(0, 50, 10), ind(1, 150, 40), ind(2, 100, 70), ind(3, 200, 130)};
    for (const auto& x : tops) tracker.observe(x);
    auto s = tracker.scores(tops);
    CHECK(s.total == 500);
    CHECK(s.current == 500);

    const std::vector<Individual> converged{ind(4, 199, 129), ind(5, 200, 130), ind(6, 10, 150)};
    s = tracker.scores(converged);
    CHECK(s.current == 200);
    CHECK(s.total == 500);

    BinTracker edges(bins);
    edges.observe(ind(0, 3, 15));
    edges.observe(ind(1, 4, 15.0001));
    CHECK(edges.scores({}).total == 3);
    CHECK_THROWS_AS(BinTracker({{0, 10}, {5, 15}}), ConfigError);
}

TEST_CASE("mean and standard error") {
    const std::vector<double> same(10, 2.55);
    auto m = mean_stderr(same);
    CHECK(m.mean == doctest::Approx(2.55));
    CHECK(m.standard_error == doctest::Approx(0.0));
    m = mean_stderr(std::vector<double>{1, 2, 3});
    CHECK(m.mean == 2);
    CHECK(m.standard_error == doctest::Approx(1 / std::sqrt(3.0)));
    m = mean_stderr(std::vector<double>{4.25});
    CHECK(m.mean == 4.25);
    CHECK(m.standard_error == 0);
    CHECK_THROWS(mean_stderr(std::vector<double>{}));
}

TEST_CASE("Mann-Whitney examples") {
    auto r = mann_whitney_u(std::vector<double>{4, 5, 6}, std::vector<double>{1, 2, 3});
    CHECK(r.u == 9);
    CHECK(r.p_value == doctest::Approx(0.05));
    CHECK(r.exact);

    r = mann_whitney_u(std::vector<double>{2, 2}, std::vector<double>{2, 2});
    CHECK(r.u == 2);
    CHECK(r.p_value >= 0.5);

    const std::vector<double> same{1, 2, 3, 4};
    CHECK(mann_whitney_u(same, same).p_value >= 0.5);
    CHECK(mann_whitney_u(std::vector<double>{1, 2, 3}, std::vector<double>{4, 5, 6}, Alternative::Less).p_value ==
          doctest::Approx(0.05));
    CHECK(mann_whitney_u(std::vector<double>{4, 5, 6}, std::vector<double>{1, 2, 3}, Alternative::TwoSided).p_value ==
          doctest::Approx(0.1));
}

TEST_CASE("Mann-Whitney exact mode matches enumeration") {
    Rng rng(4);
    std::uniform_int_distribution<int> value(0, 4);
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t m = 1; m + n <= 10; ++m)
            for (int t = 0; t < 4; ++t) {
                std::vector<double> a(n), b(m);
                for (auto& x : a) x = value(rng);
                for (auto& x : b) x = value(rng);
                for (auto alt : {Alternative::Greater, Alternative::Less, Alternative::TwoSided}) {
                    const auto r = mann_whitney_u(a, b, alt);
                    CHECK(r.exact);
                    CHECK(r.p_value == doctest::Approx(brute_force_p(a, b, alt)).epsilon(1e-12));
                }
            }
}

TEST_CASE("Mann-Whitney normal approximation for large samples") {
    std::vector<double> a(30), b(30);
    std::iota(a.begin(), a.end(), 15.0);
    std::iota(b.begin(), b.end(), 0.0);
    const auto r = mann_whitney_u(a, b);
    CHECK_FALSE(r.exact);
    CHECK(r.p_value < 0.01);
    CHECK(mann_whitney_u(b, a).p_value > 0.99);
    const auto z = mann_whitney_u(a, a);
    CHECK(z.p_value > 0.4);
}
