#include "cli/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "trapcorr/error.hpp"

namespace trapcorr::cli {

std::string format_double(double x) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{})
        throw ArgumentError("csv: cannot format value");
    return {buf.data(), ptr};
}

std::size_t CsvTable::column(const std::string &name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name)
            return i;
    throw ArgumentError("csv: missing column '" + name + "'");
}

std::vector<double> CsvTable::column_values(const std::string &name) const {
    const auto c = column(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto &r : rows)
        out.push_back(r[c]);
    return out;
}

void write_csv(std::ostream &out, const CsvTable &table) {
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << table.header[i];
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_double(row[i]);
        out << '\n';
    }
}

namespace {

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    const auto last = s.find_last_not_of(" \t\r");
    return first == std::string::npos ? "" : s.substr(first, last - first + 1);
}

} // namespace

CsvTable read_csv(std::istream &in) {
    CsvTable table;
    std::string line;
    if (!std::getline(in, line))
        throw ArgumentError("csv: empty input");
    for (auto &h : split(line))
        table.header.push_back(trim(h));
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        const auto cells = split(line);
        if (cells.size() != table.header.size())
            throw ArgumentError("csv: line " + std::to_string(line_no) + " has " +
                                std::to_string(cells.size()) + " fields, expected " +
                                std::to_string(table.header.size()));
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto &raw : cells) {
            const auto cell = trim(raw);
            double v = 0.0;
            const auto [ptr, ec] =
                std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || ptr != cell.data() + cell.size() ||
                !std::isfinite(v))
                throw ArgumentError("csv: line " + std::to_string(line_no) +
                                    ": not a number '" + cell + "'");
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace trapcorr::cli
