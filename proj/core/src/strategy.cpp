#include "bdom/strategy.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "bdom/novelty.hpp"
#include "bdom/nsga2.hpp"

namespace bdom {
namespace {

struct StrategyNames {
    StrategyKind kind;
    std::string_view name;
    std::string_view label;
};

constexpr std::array<StrategyNames, 8> kNames{{
    {StrategyKind::Fitness, "fitness", "Fitness"},
    {StrategyKind::Novelty, "novelty", "Novelty"},
    {StrategyKind::Lsnf, "lsnf", "LSNF"},
    {StrategyKind::NsgaNf, "nsga_nf", "NSGA-NF"},
    {StrategyKind::Nslc, "nslc", "NSLC"},
    {StrategyKind::MapElites, "map_elites", "MAP-Elites"},
    {StrategyKind::Bdma2, "bdma2", "BDMA-2"},
    {StrategyKind::Bdma2a, "bdma2a", "BDMA-2a"},
}};

std::vector<double> fitness_of(std::span<const Individual> pool) {
    std::vector<double> out(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) out[i] = pool[i].fitness();
    return out;
}

Selection keep_best(std::span<const Individual> pool, const std::vector<std::size_t>& best_first,
                    std::size_t capacity) {
    Selection out;
    const std::size_t keep = std::min(capacity, best_first.size());
    out.survivors.assign(best_first.begin(), best_first.begin() + static_cast<std::ptrdiff_t>(keep));
    std::sort(out.survivors.begin(), out.survivors.end());
    std::vector<bool> kept(pool.size(), false);
    for (auto i : out.survivors) kept[i] = true;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (!kept[i]) out.deleted.push_back(pool[i].id());
    return out;
}

}  // namespace

std::string_view strategy_name(StrategyKind kind) noexcept {
    for (const auto& n : kNames)
        if (n.kind == kind) return n.name;
    return "unknown";
}

std::string_view strategy_label(StrategyKind kind) noexcept {
    for (const auto& n : kNames)
        if (n.kind == kind) return n.label;
    return "unknown";
}

StrategyKind parse_strategy(std::string_view name) {
    for (const auto& n : kNames)
        if (n.name == name || n.label == name) return n.kind;
    throw ConfigError("unknown strategy '" + std::string(name) +
                      "' (expected fitness, novelty, lsnf, nsga_nf, nslc, map_elites, bdma2 or bdma2a)");
}

void NoveltyParams::validate() const {
    if (k < 1) throw ConfigError("novelty k must be at least 1");
    NoveltyArchive{p_add};
}

RankingStrategy RankingStrategy::make(StrategyKind kind, std::size_t capacity, double w) {
    RankingStrategy s;
    s.kind = kind;
    s.domination = DominationParams::split(w, capacity);
    return s;
}

void RankingStrategy::validate(std::size_t capacity) const {
    if (capacity < 2) throw ConfigError("population capacity must be at least 2");
    novelty.validate();
    lsnf.validate();
    if (!(bin_width > 0.0)) throw ConfigError("bin width must be positive");
    if (uses_domination()) domination.validate(capacity);
}

bool RankingStrategy::uses_archive() const noexcept {
    switch (kind) {
        case StrategyKind::Novelty:
        case StrategyKind::Lsnf:
        case StrategyKind::Nslc:
            return novelty.use_archive;
        case StrategyKind::NsgaNf:
            return novelty.use_archive && !behavioral_diversity;
        default:
            return false;
    }
}

Selection select_survivors(const RankingStrategy& strategy, std::span<const Individual> pool,
                           std::size_t capacity, std::span<const Behavior> archive, double current_w) {
    const auto& nov = strategy.novelty;
    const std::span<const Behavior> used_archive = strategy.uses_archive() ? archive : std::span<const Behavior>{};

    switch (strategy.kind) {
        case StrategyKind::Fitness:
            return keep_best(pool, order_by_score(pool, fitness_of(pool)), capacity);

        case StrategyKind::Novelty:
            return keep_best(pool, order_by_score(pool, novelty_scores(pool, used_archive, nov.k)), capacity);

        case StrategyKind::Lsnf:
            return keep_best(pool, lsnf_order(pool, novelty_scores(pool, used_archive, nov.k), strategy.lsnf),
                             capacity);

        case StrategyKind::NsgaNf:
        case StrategyKind::Nslc: {
            const std::size_t k =
                strategy.kind == StrategyKind::NsgaNf && strategy.behavioral_diversity ? pool.size() - 1 : nov.k;
            const auto novelty = novelty_scores(pool, used_archive, k);
            const auto first = strategy.kind == StrategyKind::NsgaNf ? fitness_of(pool)
                                                                     : local_competition_scores(pool, nov.k);
            std::vector<ObjectivePair> objectives(pool.size());
            for (std::size_t i = 0; i < pool.size(); ++i) objectives[i] = {first[i], novelty[i]};
            return keep_best(pool, nsga2_order(pool, objectives), capacity);
        }

        case StrategyKind::Bdma2:
        case StrategyKind::Bdma2a: {
            auto params = strategy.domination;
            if (params.dom_slots + params.nov_slots != capacity) params = DominationParams::split(params.w, capacity);
            params.w = strategy.kind == StrategyKind::Bdma2a ? bdma2a_adapt_w(pool, current_w) : strategy.domination.w;
            const auto picked = bdma2_select(pool, params, nov.k);
            Selection out;
            out.survivors = picked.survivors();
            for (auto i : picked.discarded) out.deleted.push_back(pool[i].id());
            out.w = params.w;
            return out;
        }

        case StrategyKind::MapElites:
            throw ConfigError("MAP-Elites keeps an elite map, not a fixed-capacity population");
    }
    throw ConfigError("unknown strategy kind");
}

CullDiagnostics rank_and_cull(const RankingStrategy& strategy, Population& population,
                              std::span<const Individual> offspring, const NoveltyArchive& archive,
                              EliteMap* elites, double current_w) {
    CullDiagnostics diag;
    if (strategy.kind == StrategyKind::MapElites) {
        if (elites == nullptr) throw ConfigError("MAP-Elites requires an elite map");
        for (const auto& child : offspring) {
            const auto result = elites->offer(child);
            if (!result.accepted) diag.deleted.push_back(child.id());
            else if (result.displaced) diag.deleted.push_back(*result.displaced);
        }
        population.members = elites->elites();
        return diag;
    }

    std::vector<Individual> pool;
    pool.reserve(population.members.size() + offspring.size());
    pool.insert(pool.end(), population.members.begin(), population.members.end());
    pool.insert(pool.end(), offspring.begin(), offspring.end());

    auto selection = select_survivors(strategy, pool, population.capacity, archive.behaviors(), current_w);
    std::vector<Individual> next;
    next.reserve(selection.survivors.size());
    for (auto i : selection.survivors) next.push_back(std::move(pool[i]));
    population.members = std::move(next);
    diag.deleted = std::move(selection.deleted);
    diag.w = selection.w;
    return diag;
}

}  // namespace bdom
