#include "tweetmarket/core/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tweetmarket/core/error.hpp"

namespace tweetmarket::core {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::optional<std::size_t> CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    return std::nullopt;
}

std::size_t CsvTable::require_column(std::string_view name) const {
    if (auto c = column(name)) return *c;
    throw ParseError(source, 1, "missing required column '" + std::string(name) + "'");
}

CsvTable parse_csv(std::string_view text, std::string source) {
    CsvTable table;
    table.source = std::move(source);

    std::size_t line = 1;
    std::size_t i = 0;
    bool have_header = false;
    // Strip UTF-8 BOM.
    if (text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;

    while (i < text.size()) {
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            if (i < text.size()) ++i;
            ++line;
            continue;
        }
        const std::size_t start_line = line;
        std::vector<std::string> fields;
        std::string field;
        bool quoted = false;
        bool field_was_quoted = false;
        bool row_done = false;
        while (i < text.size() && !row_done) {
            const char c = text[i];
            if (quoted) {
                if (c == '"') {
                    if (i + 1 < text.size() && text[i + 1] == '"') {
                        field.push_back('"');
                        i += 2;
                        continue;
                    }
                    quoted = false;
                    ++i;
                    continue;
                }
                if (c == '\n') ++line;
                field.push_back(c);
                ++i;
                continue;
            }
            switch (c) {
                case '"':
                    if (!field.empty() && !std::all_of(field.begin(), field.end(),
                                                       [](char ch) { return ch == ' '; })) {
                        throw ParseError(table.source, line, "stray quote inside unquoted field");
                    }
                    field.clear();
                    quoted = true;
                    field_was_quoted = true;
                    break;
                case ',':
                    fields.push_back(field_was_quoted ? field : std::string(trim(field)));
                    field.clear();
                    field_was_quoted = false;
                    break;
                case '\r':
                    break;
                case '\n':
                    ++line;
                    row_done = true;
                    break;
                default:
                    field.push_back(c);
            }
            ++i;
        }
        if (quoted) throw ParseError(table.source, start_line, "unterminated quoted field");
        fields.push_back(field_was_quoted ? field : std::string(trim(field)));

        const bool blank = fields.size() == 1 && fields[0].empty() && !field_was_quoted;
        if (blank) continue;
        if (!have_header) {
            table.header = std::move(fields);
            have_header = true;
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw ParseError(table.source, start_line,
                             "expected " + std::to_string(table.header.size()) + " fields, got " +
                                 std::to_string(fields.size()));
        }
        table.rows.push_back(CsvRow{start_line, std::move(fields)});
    }
    return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), path.string());
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0.0) return "0";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

}  // namespace tweetmarket::core
