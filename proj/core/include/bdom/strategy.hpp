#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bdom/bdma.hpp"
#include "bdom/core.hpp"
#include "bdom/lsnf.hpp"
#include "bdom/map_elites.hpp"

namespace bdom {

enum class StrategyKind { Fitness, Novelty, Lsnf, NsgaNf, Nslc, MapElites, Bdma2, Bdma2a };

inline constexpr StrategyKind kAllStrategies[] = {
    StrategyKind::Fitness, StrategyKind::Novelty,   StrategyKind::Lsnf,  StrategyKind::NsgaNf,
    StrategyKind::Nslc,    StrategyKind::MapElites, StrategyKind::Bdma2, StrategyKind::Bdma2a,
};

/// Command-line name, e.g. "nsga_nf".
std::string_view strategy_name(StrategyKind kind) noexcept;
/// Display label, e.g. "NSGA-NF".
std::string_view strategy_label(StrategyKind kind) noexcept;
/// Accepts either the command-line name or the display label.
StrategyKind parse_strategy(std::string_view name);

struct NoveltyParams {
    std::size_t k = 5;
    double p_add = 0.01;
    bool use_archive = true;

    void validate() const;
};

struct RankingStrategy {
    StrategyKind kind = StrategyKind::Fitness;
    NoveltyParams novelty;
    LsnfParams lsnf;
    DominationParams domination;
    double bin_width = 1.0;
    /// NSGA-NF only: novelty over the whole pool (k = pool size - 1), no archive.
    bool behavioral_diversity = false;

    /// Defaults for `kind` with an even BDMA slot split over `capacity`.
    static RankingStrategy make(StrategyKind kind, std::size_t capacity, double w = 1.0);

    void validate(std::size_t capacity) const;
    [[nodiscard]] bool uses_archive() const noexcept;
    [[nodiscard]] bool uses_domination() const noexcept {
        return kind == StrategyKind::Bdma2 || kind == StrategyKind::Bdma2a;
    }
};

struct Selection {
    std::vector<std::size_t> survivors;  // ascending pool indices
    std::vector<std::uint64_t> deleted;  // ids, in pool order
    double w = 0.0;                      // domination scale used (BDMA only)
};

/// Chooses `capacity` survivors from `pool` for every strategy except
/// MAP-Elites. `current_w` is the BDMA-2a scale carried between iterations.
Selection select_survivors(const RankingStrategy& strategy, std::span<const Individual> pool,
                           std::size_t capacity, std::span<const Behavior> archive, double current_w);

struct CullDiagnostics {
    std::vector<std::uint64_t> deleted;
    double w = 0.0;
};

/// Integrates `offspring` into the population. Fixed-capacity strategies rank
/// population + offspring and keep `population.capacity`. MAP-Elites offers
/// each offspring to `elites` and replaces the population with the elites.
CullDiagnostics rank_and_cull(const RankingStrategy& strategy, Population& population,
                              std::span<const Individual> offspring, const NoveltyArchive& archive,
                              EliteMap* elites, double current_w);

}  // namespace bdom
