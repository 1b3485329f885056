#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bdom/metrics.hpp"

namespace bdom::cli {

inline constexpr std::string_view kCsvHeader = "iteration,best_fitness,total_bin_score,current_bin_score,gnp,gnt,w";

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

/// Writes the header and every row whose iteration is a multiple of `thin`,
/// plus the final row.
void write_csv(std::ostream& out, std::span<const LogRow> rows, std::uint64_t thin = 1);
void write_csv(const std::filesystem::path& path, std::span<const LogRow> rows, std::uint64_t thin = 1);

/// Inverse of write_csv. Throws ConfigError on a malformed file.
std::vector<LogRow> read_csv(std::istream& in);

}  // namespace bdom::cli
