#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bdom/core.hpp"

namespace bdom {

using BinKey = std::vector<std::int64_t>;

/// MAP-Elites archive: one elite per behavior bin, where a behavior maps to
/// the bin floor(component / bin_width) in every dimension.
class EliteMap {
public:
    explicit EliteMap(double bin_width = 1.0);

    struct OfferResult {
        bool accepted = false;
        std::optional<std::uint64_t> displaced;  // id of the replaced elite
    };

    /// Stores the candidate iff its bin is empty or it is strictly fitter
    /// than the incumbent.
    OfferResult offer(const Individual& candidate);

    [[nodiscard]] BinKey bin_of(const Behavior& behavior) const;
    [[nodiscard]] const Individual* elite_at(const BinKey& key) const;
    [[nodiscard]] std::size_t size() const noexcept { return bins_.size(); }
    [[nodiscard]] bool empty() const noexcept { return bins_.empty(); }
    [[nodiscard]] double bin_width() const noexcept { return bin_width_; }

    /// Elites in bin-key order.
    [[nodiscard]] std::vector<Individual> elites() const;

private:
    double bin_width_;
    std::map<BinKey, Individual> bins_;
};

}  // namespace bdom
