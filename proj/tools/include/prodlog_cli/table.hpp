#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prodlog::cli {

/// Rectangular numeric table with a header row.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string& name) const;  // throws std::out_of_range
};

/// Shortest round-trip-safe form with 17 significant digits, independent of
/// the C locale.
std::string format_number(double value);

/// Comma-separated, '\n' line endings, header always present.
void write_csv(std::ostream& out, const Table& table);

}  // namespace prodlog::cli
