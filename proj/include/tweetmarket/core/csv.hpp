#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tweetmarket::core {

struct CsvRow {
    std::size_t line = 0;  // 1-based physical line where the record starts
    std::vector<std::string> fields;
};

/// A parsed comma-separated file: header plus data rows. Lines starting with '#'
/// are comments. Quoted fields follow RFC 4180 (embedded commas, newlines, "").
struct CsvTable {
    std::string source;
    std::vector<std::string> header;
    std::vector<CsvRow> rows;

    /// Column index by exact header name.
    std::optional<std::size_t> column(std::string_view name) const;
    /// Column index or ParseError naming the file.
    std::size_t require_column(std::string_view name) const;
};

CsvTable parse_csv(std::string_view text, std::string source);
CsvTable read_csv(const std::filesystem::path& path);

std::string csv_escape(std::string_view field);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

std::string_view trim(std::string_view s);

}  // namespace tweetmarket::core
