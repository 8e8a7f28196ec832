#include "sgb/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sgb/errors.hpp"
#include "sgb/parallel.hpp"

namespace sgb {

namespace {
unsigned g_max_threads = 0;
}

void set_max_threads(unsigned n) { g_max_threads = n; }

unsigned max_threads() {
    if (g_max_threads > 0) return g_max_threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::optional<std::size_t> CsvTable::find_column(const std::string& name) const {
    for (std::size_t j = 0; j < header.size(); ++j)
        if (header[j] == name) return j;
    return std::nullopt;
}

namespace {

// Splits one physical line into cells. Supports double-quoted fields with ""
// escapes; no embedded newlines (none of our formats need them).
std::vector<CsvCell> split_line(const std::string& line, std::size_t lineno) {
    std::vector<CsvCell> cells;
    CsvCell cur;
    std::size_t i = 0;
    const std::size_t n = line.size();
    while (true) {
        cur = CsvCell{};
        if (i < n && line[i] == '"') {
            cur.quoted = true;
            ++i;
            while (true) {
                if (i >= n)
                    throw ParseError("unterminated quote on line " +
                                     std::to_string(lineno));
                if (line[i] == '"') {
                    if (i + 1 < n && line[i + 1] == '"') {
                        cur.text.push_back('"');
                        i += 2;
                    } else {
                        ++i;
                        break;
                    }
                } else {
                    cur.text.push_back(line[i]);
                    ++i;
                }
            }
        } else {
            while (i < n && line[i] != ',') {
                cur.text.push_back(line[i]);
                ++i;
            }
        }
        cells.push_back(std::move(cur));
        if (i >= n) break;
        if (line[i] == ',') {
            ++i;
            if (i == n) {  // trailing comma -> empty final cell
                cells.push_back(CsvCell{});
                break;
            }
        }
    }
    return cells;
}

}  // namespace

CsvTable parse_csv(const std::string& content) {
    CsvTable table;
    std::istringstream in(content);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.eof()) break;
        auto cells = split_line(line, lineno);
        if (lineno == 1) {
            table.header.reserve(cells.size());
            for (auto& c : cells) table.header.push_back(c.text);
        } else {
            if (cells.size() != table.header.size())
                throw ParseError("line " + std::to_string(lineno) + " has " +
                                 std::to_string(cells.size()) +
                                 " fields, header has " +
                                 std::to_string(table.header.size()));
            table.rows.push_back(std::move(cells));
        }
    }
    if (table.header.empty()) throw ParseError("empty table");
    return table;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str());
}

std::string format_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v,
                             std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_integer(long long v) { return std::to_string(v); }

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

std::optional<double> parse_number(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    // Skip leading whitespace; from_chars does not.
    while (first < last && (*first == ' ' || *first == '\t')) ++first;
    double value = 0.0;
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{}) return std::nullopt;
    const char* p = res.ptr;
    while (p < last && (*p == ' ' || *p == '\t')) ++p;
    if (p != last) return std::nullopt;
    return value;
}

}  // namespace sgb
