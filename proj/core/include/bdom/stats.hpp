#pragma once

#include <cstddef>
#include <span>

namespace bdom {

struct MeanStderr {
    double mean = 0.0;
    double standard_error = 0.0;  // sample sd (n - 1) / sqrt(n); 0 when n == 1
};

/// Throws ConfigError on an empty sample.
MeanStderr mean_stderr(std::span<const double> samples);

enum class Alternative {
    Greater,  // a tends to exceed b
    Less,
    TwoSided,
};

struct MannWhitneyResult {
    double u = 0.0;  // pairs with a > b, plus half the ties
    double p_value = 1.0;
    bool exact = false;
};

/// Mann-Whitney U test. Uses the exact permutation distribution of U (ties
/// handled through mid-ranks) when both samples have at most
/// kExactLimit entries, and the tie-corrected normal approximation with
/// continuity correction otherwise.
MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b,
                                 Alternative alternative = Alternative::Greater);

inline constexpr std::size_t kExactLimit = 20;

}  // namespace bdom
