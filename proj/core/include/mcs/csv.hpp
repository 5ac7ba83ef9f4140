#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace mcs {

/// CSV emitter: mandatory header row, '.' decimal separator, 17
/// significant digits for numeric cells.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);

    void row(const std::vector<double>& values);
    /// Pre-formatted row for mixed content (e.g. failure markers).
    void raw_row(const std::string& line);

private:
    std::ofstream out_;
    size_t columns_;
};

std::string format_cell(double v); // %.17g

/// Plain-text companion file describing the columns of a CSV output.
void write_companion(const std::string& csv_path, const std::string& text);

} // namespace mcs
