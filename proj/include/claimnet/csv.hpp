#pragma once
// Minimal RFC-4180 CSV: quoted fields may contain commas, quotes ("" escape)
// and newlines. All output uses LF newlines and '.' decimals.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace claimnet {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const; // throws on unknown column
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

std::string csv_escape(const std::string& field);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

// Fixed-point with 3 decimals, the rounding of printf("%.3f").
std::string format3(double v);

} // namespace claimnet
