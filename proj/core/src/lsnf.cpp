#include "bdom/lsnf.hpp"

#include <algorithm>
#include <string>

namespace bdom {
namespace {

std::vector<double> normalized(std::span<const double> values) {
    std::vector<double> out(values.size(), 0.0);
    if (values.empty()) return out;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double range = *hi - *lo;
    if (range <= 0.0) return out;
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - *lo) / range;
    return out;
}

}  // namespace

void LsnfParams::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("LSNF p must lie in [0, 1], got " + std::to_string(p));
}

std::vector<double> lsnf_scores(std::span<const double> fitness, std::span<const double> novelty,
                                const LsnfParams& params) {
    params.validate();
    if (fitness.size() != novelty.size()) throw ConfigError("lsnf_scores: size mismatch");
    const auto f = normalized(fitness);
    const auto n = normalized(novelty);
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = (1.0 - params.p) * f[i] + params.p * n[i];
    return out;
}

std::vector<std::size_t> lsnf_order(std::span<const Individual> pool, std::span<const double> novelty,
                                    const LsnfParams& params) {
    std::vector<double> fitness(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) fitness[i] = pool[i].fitness();
    const auto scores = lsnf_scores(fitness, novelty, params);
    return order_by_score(pool, scores);
}

}  // namespace bdom
