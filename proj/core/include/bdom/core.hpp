#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace bdom {

using Rng = std::mt19937_64;

/// Raised for invalid parameters, unknown names and mismatched dimensions.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a computation needs more individuals than it was given.
class DegenerateInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kGeneMin = 0.0;
inline constexpr double kGeneMax = 150.0;

/// Fixed-length real vector in the solution space. Every gene lies in
/// [kGeneMin, kGeneMax]; out-of-range values are clamped on construction.
class Genome {
public:
    Genome() = default;
    explicit Genome(std::vector<double> genes);

    [[nodiscard]] std::span<const double> genes() const noexcept { return genes_; }
    [[nodiscard]] std::size_t size() const noexcept { return genes_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return genes_[i]; }

    bool operator==(const Genome&) const = default;

private:
    std::vector<double> genes_;
};

using Behavior = std::vector<double>;

/// Result of a single domain evaluation.
struct Evaluation {
    double fitness = 0.0;
    Behavior behavior;
};

/// A genome together with its fitness and behavior. Both are evaluated once,
/// when the individual is created, and are read-only afterwards. Ids follow
/// birth order within a run.
class Individual {
public:
    Individual() = default;
    Individual(std::uint64_t id, Genome genome, Evaluation evaluation);
    Individual(std::uint64_t id, double fitness, Behavior behavior);

    [[nodiscard]] std::uint64_t id() const noexcept { return id_; }
    [[nodiscard]] const Genome& genome() const noexcept { return genome_; }
    [[nodiscard]] double fitness() const noexcept { return fitness_; }
    [[nodiscard]] const Behavior& behavior() const noexcept { return behavior_; }

private:
    std::uint64_t id_ = 0;
    Genome genome_;
    double fitness_ = 0.0;
    Behavior behavior_;
};

struct Population {
    std::vector<Individual> members;
    std::size_t capacity = 20;
};

/// Append-only sample of past behaviors; each candidate is admitted with
/// probability p_add.
class NoveltyArchive {
public:
    explicit NoveltyArchive(double p_add = 0.01);

    /// Draws the admission decision for one candidate.
    bool admit(Rng& rng) const;
    void add(Behavior behavior);
    /// admit() followed by add() on success.
    bool maybe_add(const Behavior& behavior, Rng& rng);

    [[nodiscard]] std::span<const Behavior> behaviors() const noexcept { return behaviors_; }
    [[nodiscard]] std::size_t size() const noexcept { return behaviors_.size(); }
    [[nodiscard]] double p_add() const noexcept { return p_add_; }

private:
    std::vector<Behavior> behaviors_;
    double p_add_;
};

/// Euclidean distance. Throws ConfigError on dimension mismatch.
double l2_distance(std::span<const double> a, std::span<const double> b);

struct Neighbor {
    double distance = 0.0;
    std::size_t index = 0;

    bool operator==(const Neighbor&) const = default;
};

/// Keeps the k closest entries ordered by (distance, index).
void keep_nearest(std::vector<Neighbor>& candidates, std::size_t k);

/// The min(k, |pool|) behaviors of `pool` closest to `target`, ascending by
/// distance with ties broken by pool index. The caller excludes the target's
/// own entry from `pool`.
std::vector<Neighbor> k_nearest(std::span<const double> target, std::span<const Behavior> pool,
                                std::size_t k);

/// Pool indices sorted best-first by descending score; equal scores put the
/// smaller id first, so the youngest of a tie ranks last.
std::vector<std::size_t> order_by_score(std::span<const Individual> pool, std::span<const double> scores);

}  // namespace bdom
