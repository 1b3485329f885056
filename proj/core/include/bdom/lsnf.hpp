#pragma once

#include <span>
#include <vector>

#include "bdom/core.hpp"

namespace bdom {

struct LsnfParams {
    double p = 0.5;  // weight on novelty; 1 - p goes to fitness

    void validate() const;
};

/// Linear scalarization of min-max normalized fitness and novelty over the
/// given collection. A term whose max equals its min contributes 0.
std::vector<double> lsnf_scores(std::span<const double> fitness, std::span<const double> novelty,
                                const LsnfParams& params);

/// Pool indices best-first by LSNF score.
std::vector<std::size_t> lsnf_order(std::span<const Individual> pool, std::span<const double> novelty,
                                    const LsnfParams& params);

}  // namespace bdom
