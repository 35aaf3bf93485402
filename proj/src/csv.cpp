#include "tridiag_hira/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace tridiag_hira {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

double parse_double(const std::string& field) {
    if (field == "nan") return NAN;
    if (field == "inf") return INFINITY;
    if (field == "-inf") return -INFINITY;
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0') throw std::invalid_argument("not a number: '" + field + "'");
    return v;
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header_.size(); ++i)
        if (header_[i] == name) return i;
    throw std::out_of_range("no column named '" + name + "'");
}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size())
        throw std::invalid_argument("row has " + std::to_string(row.size()) + " fields, header has " +
                                    std::to_string(header_.size()));
    rows_.push_back(std::move(row));
}

namespace {

void write_field(std::ostream& out, const std::string& f) {
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
        out << f;
        return;
    }
    out << '"';
    for (char c : f) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

void write_record(std::ostream& out, const std::vector<std::string>& rec) {
    for (std::size_t i = 0; i < rec.size(); ++i) {
        if (i) out << ',';
        write_field(out, rec[i]);
    }
    out << '\n';
}

// Reads one record; returns false at end of input.
bool read_record(std::istream& in, std::vector<std::string>& rec) {
    rec.clear();
    if (in.peek() == std::char_traits<char>::eof()) return false;
    std::string field;
    bool quoted = false;
    for (;;) {
        const int ci = in.get();
        if (ci == std::char_traits<char>::eof()) {
            if (quoted) throw std::runtime_error("unterminated quoted field");
            rec.push_back(field);
            return true;
        }
        const char c = static_cast<char>(ci);
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            rec.push_back(field);
            field.clear();
        } else if (c == '\n') {
            rec.push_back(field);
            return true;
        } else if (c == '\r' && in.peek() == '\n') {
            in.get();
            rec.push_back(field);
            return true;
        } else {
            field.push_back(c);
        }
    }
}

}  // namespace

void CsvTable::write(std::ostream& out) const {
    write_record(out, header_);
    for (const auto& r : rows_) write_record(out, r);
}

void CsvTable::write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    write(out);
    out.flush();
    if (!out) throw std::runtime_error(path.string() + ": write failed");
}

CsvTable CsvTable::parse(std::istream& in) {
    CsvTable t;
    std::vector<std::string> rec;
    if (!read_record(in, rec)) return t;
    t.header_ = rec;
    while (read_record(in, rec)) t.add_row(rec);
    return t;
}

CsvTable CsvTable::read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path.string() + ": cannot open for reading");
    return parse(in);
}

}  // namespace tridiag_hira
