#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "bdom/evolution.hpp"

namespace bdom::cli {

/// Worker count to use for `requested` (0 picks the hardware concurrency).
std::size_t resolve_workers(std::size_t requested) noexcept;

/// Runs every config on up to `workers` threads. Result i belongs to config i
/// regardless of completion order. The first exception is rethrown after all
/// workers stop.
std::vector<RunLog> run_batch(const std::vector<RunConfig>& configs, std::size_t workers,
                              const std::function<void(std::size_t done, std::size_t total)>& progress = {});

}  // namespace bdom::cli
