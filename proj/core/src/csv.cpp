#include "mcs/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace mcs {

std::string format_cell(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : out_(path), columns_(header.size()) {
    if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
    for (size_t i = 0; i < header.size(); ++i)
        out_ << header[i] << (i + 1 < header.size() ? "," : "\n");
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != columns_)
        throw std::invalid_argument("CsvWriter: column count mismatch");
    for (size_t i = 0; i < values.size(); ++i)
        out_ << format_cell(values[i]) << (i + 1 < values.size() ? "," : "\n");
}

void CsvWriter::raw_row(const std::string& line) { out_ << line << "\n"; }

void write_companion(const std::string& csv_path, const std::string& text) {
    std::ofstream out(csv_path + ".txt");
    if (!out) throw std::runtime_error("write_companion: cannot open " + csv_path + ".txt");
    out << text;
}

} // namespace mcs
