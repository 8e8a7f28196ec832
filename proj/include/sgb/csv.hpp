#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sgb {

// One parsed CSV cell: the raw text plus whether it was double-quoted in the
// source. Quoting is how categorical values are marked in data files.
struct CsvCell {
    std::string text;
    bool quoted = false;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<CsvCell>> rows;

    std::size_t ncol() const { return header.size(); }
    std::size_t nrow() const { return rows.size(); }
    std::optional<std::size_t> find_column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);
CsvTable parse_csv(const std::string& content);

// Number formatting for all text output: 17 significant digits, '.' decimal
// separator, locale-independent.
std::string format_number(double v);
std::string format_integer(long long v);

// Quotes a field if it contains a comma, quote, or newline.
std::string csv_escape(const std::string& field);

// Parses a decimal number; returns nullopt on trailing garbage.
std::optional<double> parse_number(const std::string& text);

}  // namespace sgb
