#pragma once

// Tabular output shared by the CLI commands. CSV layout:
//   # key=value key=value ...      metadata comment
//   col_a,col_b,...                header
//   1.23,4.56,...                  rows, 15 significant digits
// JSON carries the same metadata, columns and (identically rounded) numbers.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace subdiff::report {

inline constexpr const char* kVersion = "subdiff-0.1.0";
inline constexpr int kSignificantDigits = 15;

struct Table {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// 15 significant digits, '.' separator, independent of the global locale.
std::string format_number(double value);

/// value rounded to what format_number prints.
double round_to_output(double value);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

/// Reads back what write_csv produced.
Table parse_csv(std::istream& in);

}  // namespace subdiff::report
