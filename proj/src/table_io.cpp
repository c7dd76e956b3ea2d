#include "isoq/table_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace isoq {

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        throw std::domain_error("table values must be finite");
    }
    if (value == 0.0) value = 0.0; // normalize -0 so reruns cannot differ
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    if (res.ec != std::errc()) {
        throw std::runtime_error("failed to format double");
    }
    return std::string(buf, res.ptr);
}

namespace {

void check_rect(const Table& table) {
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::runtime_error("table row width does not match column count");
        }
    }
}

} // namespace

std::string to_csv(const Table& table) {
    check_rect(table);
    std::string out;
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    check_rect(table);
    std::string out = "{\"columns\":[";
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += '"';
        out += table.columns[i];
        out += '"';
    }
    out += "],\"rows\":[";
    for (size_t r = 0; r < table.rows.size(); ++r) {
        if (r) out += ',';
        out += '[';
        for (size_t i = 0; i < table.rows[r].size(); ++i) {
            if (i) out += ',';
            out += format_double(table.rows[r][i]);
        }
        out += ']';
    }
    out += "]}\n";
    return out;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

Table parse_csv(const std::string& text) {
    Table table;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("CSV input is empty");
    }
    table.columns = split_line(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields = split_line(line);
        if (fields.size() != table.columns.size()) {
            throw std::runtime_error("CSV row width does not match header");
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (const std::string& f : fields) {
            // std::from_chars for doubles keeps parsing locale-free.
            double v = 0.0;
            auto res = std::from_chars(f.data(), f.data() + f.size(), v);
            if (res.ec != std::errc() || res.ptr != f.data() + f.size()) {
                throw std::runtime_error("unparsable CSV number: " + f);
            }
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed writing " + path);
    }
}

} // namespace isoq
