#pragma once
// RFC-4180 style tables with LF line endings. Numbers are written in
// scientific notation with 17 significant digits, which round-trips binary64.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tridiag_hira {

std::string format_double(double v);
double parse_double(const std::string& field);

class CsvTable {
public:
    CsvTable() = default;
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }
    std::size_t column(const std::string& name) const;

    // Throws std::invalid_argument if the width differs from the header.
    void add_row(std::vector<std::string> row);

    void write(std::ostream& out) const;
    void write(const std::filesystem::path& path) const;

    static CsvTable parse(std::istream& in);
    static CsvTable read(const std::filesystem::path& path);

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace tridiag_hira
