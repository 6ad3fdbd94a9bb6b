#pragma once

#include <cstddef>
#include <fstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dilsa {

// Streaming reader for comma-separated files with a header row.
// Lines starting with '#' are skipped anywhere in the file, which is
// how generated CSVs carry their provenance comments.
class CsvReader {
public:
    explicit CsvReader(const std::string& path);

    // Header column names in file order.
    const std::vector<std::string>& columns() const { return columns_; }

    // Index of a named column; throws std::runtime_error naming the
    // file and the column when absent.
    std::size_t column(const std::string& name) const;
    bool has_column(const std::string& name) const;

    // Reads the next data row into `fields`. Returns false at EOF.
    bool next(std::vector<std::string>& fields);

    // 1-based line number of the row most recently returned by next().
    std::size_t line_number() const { return line_number_; }

    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ifstream in_;
    std::vector<std::string> columns_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t line_number_ = 0;
    std::size_t cursor_ = 0;
};

void split_csv_line(std::string_view line, std::vector<std::string>& out);

// Parse helpers that throw std::runtime_error with "<path>:<line>:"
// context on malformed values.
double parse_double_field(const std::string& value, const std::string& path,
                          std::size_t line, const std::string& column);
long long parse_int_field(const std::string& value, const std::string& path,
                          std::size_t line, const std::string& column);

// Shortest round-trip representation of a double, suitable for CSV.
std::string format_double(double v);

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    void comment(const std::string& text);
    void row(const std::vector<std::string>& fields);

private:
    std::string path_;
    std::ofstream out_;
};

} // namespace dilsa
