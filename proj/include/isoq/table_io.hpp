#pragma once

#include <string>
#include <vector>

namespace isoq {

// Shortest decimal representation that round-trips to the same double.
// NaN and infinities are rejected; outputs never depend on locale.
std::string format_double(double value);

// Rectangular numeric table with named columns.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Serializes with comma separator, header row, LF line endings, and '.' as
// the decimal mark.  Every row must match the column count.
std::string to_csv(const Table& table);

// Compact JSON object {"columns": [...], "rows": [[...], ...]} using the
// same number formatting as the CSV writer.
std::string to_json(const Table& table);

// Parses CSV produced by to_csv, including the header row.
// Throws std::runtime_error on ragged rows or unparsable numbers.
Table parse_csv(const std::string& text);

// Writes content to path, replacing any existing file.
void write_text_file(const std::string& path, const std::string& content);

} // namespace isoq
