#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bdom/core.hpp"
#include "bdom/domains.hpp"

namespace bdom {

/// Maximum pairwise behavior distance. Throws DegenerateInput below 2 members.
double gnp(std::span<const Individual> population);

/// Total pairwise behavior distance over unordered pairs.
double gnt(std::span<const Individual> population);

struct BinScores {
    double total = 0.0;    // best fitness ever seen per bin, summed
    double current = 0.0;  // best fitness in the current population per bin, summed
};

/// Running best fitness per bin over every evaluated individual. Bins look at
/// the first behavior component.
class BinTracker {
public:
    BinTracker() = default;
    explicit BinTracker(std::vector<BinInterval> bins);

    void observe(const Individual& individual);
    [[nodiscard]] BinScores scores(std::span<const Individual> population) const;
    [[nodiscard]] std::span<const BinInterval> bins() const noexcept { return bins_; }
    [[nodiscard]] std::span<const double> best_ever() const noexcept { return best_; }

private:
    std::vector<BinInterval> bins_;
    std::vector<double> best_;
};

/// One row per iteration; row 0 is the initial state.
struct LogRow {
    std::uint64_t iteration = 0;
    double best_fitness = 0.0;
    double total_bin_score = 0.0;
    double current_bin_score = 0.0;
    double gnp = 0.0;
    double gnt = 0.0;
    double w = 0.0;

    bool operator==(const LogRow&) const = default;
};

struct RunLog {
    std::vector<LogRow> rows;
    std::vector<Individual> final_population;

    [[nodiscard]] const LogRow& last() const { return rows.back(); }
};

}  // namespace bdom
