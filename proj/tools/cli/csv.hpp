#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trapcorr::cli {

/// Shortest decimal that round-trips to the same double.
[[nodiscard]] std::string format_double(double x);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    /// Index of a named column; throws ArgumentError if absent.
    [[nodiscard]] std::size_t column(const std::string &name) const;
    [[nodiscard]] std::vector<double> column_values(const std::string &name) const;
};

void write_csv(std::ostream &out, const CsvTable &table);
/// Reads a header line followed by numeric rows. Throws ArgumentError on
/// ragged or non-numeric input.
[[nodiscard]] CsvTable read_csv(std::istream &in);

} // namespace trapcorr::cli
