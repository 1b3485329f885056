#include "bdom/cli/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bdom/cli/config.hpp"

namespace bdom::cli {

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) throw std::runtime_error("cannot format value");
    return std::string(buf.data(), ptr);
}

void write_csv(std::ostream& out, std::span<const LogRow> rows, std::uint64_t thin) {
    out << kCsvHeader << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.iteration % thin != 0 && i + 1 != rows.size()) continue;
        out << r.iteration << ',' << format_double(r.best_fitness) << ',' << format_double(r.total_bin_score) << ','
            << format_double(r.current_bin_score) << ',' << format_double(r.gnp) << ',' << format_double(r.gnt)
            << ',' << format_double(r.w) << '\n';
    }
}

void write_csv(const std::filesystem::path& path, std::span<const LogRow> rows, std::uint64_t thin) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path.string());
    write_csv(out, rows, thin);
    if (!out) throw ConfigError("failed writing " + path.string());
}

std::vector<LogRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw ConfigError("missing or unexpected CSV header");
    std::vector<LogRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::array<std::string, 7> cell;
        for (auto& c : cell)
            if (!std::getline(fields, c, ',')) throw ConfigError("short CSV row: " + line);
        LogRow r;
        r.iteration = parse_unsigned("iteration", cell[0]);
        r.best_fitness = parse_double("best_fitness", cell[1]);
        r.total_bin_score = parse_double("total_bin_score", cell[2]);
        r.current_bin_score = parse_double("current_bin_score", cell[3]);
        r.gnp = parse_double("gnp", cell[4]);
        r.gnt = parse_double("gnt", cell[5]);
        r.w = parse_double("w", cell[6]);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace bdom::cli
