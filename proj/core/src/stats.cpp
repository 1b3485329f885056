#include "bdom/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "bdom/core.hpp"

namespace bdom {
namespace {

struct Pooled {
    std::vector<std::int64_t> doubled_ranks;  // 2 * mid-rank, aligned with a then b
    double tie_term = 0.0;                    // sum of t^3 - t over tie groups
};

Pooled pooled_ranks(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size() + b.size();
    std::vector<double> values(a.begin(), a.end());
    values.insert(values.end(), b.begin(), b.end());
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });

    Pooled out;
    out.doubled_ranks.assign(n, 0);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        // ranks i+1 .. j+1 share the mid-rank (i + j + 2) / 2
        const auto doubled = static_cast<std::int64_t>(i + j + 2);
        for (std::size_t r = i; r <= j; ++r) out.doubled_ranks[order[r]] = doubled;
        const double t = static_cast<double>(j - i + 1);
        out.tie_term += t * t * t - t;
        i = j + 1;
    }
    return out;
}

// Upper/lower tail probabilities of 2U under random relabelling.
struct Tails {
    double at_least = 0.0;
    double at_most = 0.0;
};

Tails exact_tails(const std::vector<std::int64_t>& doubled_ranks, std::size_t na, std::int64_t observed_2u) {
    const std::size_t n = doubled_ranks.size();
    std::int64_t max_sum = 0;
    for (auto r : doubled_ranks) max_sum += r;
    // ways[j][s]: subsets of size j whose doubled ranks sum to s
    std::vector<std::vector<std::uint64_t>> ways(na + 1, std::vector<std::uint64_t>(max_sum + 1, 0));
    ways[0][0] = 1;
    for (std::size_t item = 0; item < n; ++item) {
        const auto r = doubled_ranks[item];
        for (std::size_t j = std::min(na, item + 1); j >= 1; --j)
            for (std::int64_t s = max_sum; s >= r; --s) ways[j][s] += ways[j - 1][s - r];
    }
    const auto offset = static_cast<std::int64_t>(na * (na + 1));
    double total = 0.0;
    double upper = 0.0;
    double lower = 0.0;
    for (std::int64_t s = 0; s <= max_sum; ++s) {
        const auto count = static_cast<double>(ways[na][s]);
        if (count == 0.0) continue;
        total += count;
        const std::int64_t u2 = s - offset;
        if (u2 >= observed_2u) upper += count;
        if (u2 <= observed_2u) lower += count;
    }
    return {upper / total, lower / total};
}

double normal_upper(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace

MeanStderr mean_stderr(std::span<const double> samples) {
    if (samples.empty()) throw ConfigError("mean_stderr needs at least one sample");
    const double n = static_cast<double>(samples.size());
    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
    if (samples.size() == 1) return {mean, 0.0};
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0)) / std::sqrt(n)};
}

MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b, Alternative alternative) {
    if (a.empty() || b.empty()) throw ConfigError("mann_whitney_u needs two non-empty samples");
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    const auto pooled = pooled_ranks(a, b);

    std::int64_t rank_sum_2 = 0;
    for (std::size_t i = 0; i < na; ++i) rank_sum_2 += pooled.doubled_ranks[i];
    const std::int64_t u2 = rank_sum_2 - static_cast<std::int64_t>(na * (na + 1));

    MannWhitneyResult out;
    out.u = static_cast<double>(u2) / 2.0;

    Tails tails;
    if (na <= kExactLimit && nb <= kExactLimit) {
        out.exact = true;
        tails = exact_tails(pooled.doubled_ranks, na, u2);
    } else {
        const double n = static_cast<double>(na + nb);
        const double mean = static_cast<double>(na * nb) / 2.0;
        const double var = static_cast<double>(na * nb) / 12.0 * ((n + 1.0) - pooled.tie_term / (n * (n - 1.0)));
        if (var <= 0.0) {
            tails = {1.0, 1.0};
        } else {
            const double sd = std::sqrt(var);
            tails.at_least = normal_upper((out.u - mean - 0.5) / sd);
            tails.at_most = normal_upper((mean - out.u - 0.5) / sd);
        }
    }

    switch (alternative) {
        case Alternative::Greater:
            out.p_value = tails.at_least;
            break;
        case Alternative::Less:
            out.p_value = tails.at_most;
            break;
        case Alternative::TwoSided:
            out.p_value = std::min(1.0, 2.0 * std::min(tails.at_least, tails.at_most));
            break;
    }
    out.p_value = std::min(out.p_value, 1.0);
    return out;
}

}  // namespace bdom
