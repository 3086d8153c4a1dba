#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace halign::csv {

/// Splits one CSV line; handles double-quoted fields with embedded commas
/// and doubled quotes. A trailing '\r' is stripped.
std::vector<std::string> parse_line(const std::string& line);

/// Shortest round-trip decimal representation (via std::to_chars).
std::string format_double(double v);

std::string escape(const std::string& field);

/// Streaming reader; the header row is consumed on construction.
class Reader {
public:
    explicit Reader(const std::string& path);

    const std::vector<std::string>& header() const { return header_; }
    const std::string& path() const { return path_; }

    /// Index of a required column; throws a schema error naming the column.
    std::size_t require_column(const std::string& name) const;

    /// Reads the next non-empty row into `fields`; false at end of file.
    bool next(std::vector<std::string>& fields);

    /// 1-based index of the last row returned by next() (header = row 1).
    std::size_t row_number() const { return row_number_; }

private:
    std::string path_;
    std::ifstream in_;
    std::vector<std::string> header_;
    std::string line_;
    std::size_t row_number_ = 1;
};

class Writer {
public:
    explicit Writer(const std::string& path);
    void row(const std::vector<std::string>& fields);

private:
    std::ofstream out_;
};

}  // namespace halign::csv
