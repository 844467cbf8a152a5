#include "subdiff/report.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace subdiff::report {

std::string format_number(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, kSignificantDigits);
    if (res.ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
    return {buf, res.ptr};
}

double round_to_output(double value)
{
    const std::string text = format_number(value);
    double parsed = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), parsed);
    return parsed;
}

void write_csv(const Table& table, std::ostream& out)
{
    out << '#';
    for (const auto& [key, value] : table.metadata) out << ' ' << key << '=' << value;
    out << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
        out << '\n';
    }
}

void write_json(const Table& table, std::ostream& out)
{
    nlohmann::ordered_json doc;
    doc["metadata"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.metadata) doc["metadata"][key] = value;
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        auto r = nlohmann::ordered_json::array();
        for (double v : row) r.push_back(round_to_output(v));
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

namespace {

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream ss(line);
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

}  // namespace

Table parse_csv(std::istream& in)
{
    Table table;
    std::string line;
    if (!std::getline(in, line) || line.empty() || line[0] != '#')
        throw std::runtime_error("parse_csv: missing metadata line");
    for (const auto& token : split(line.substr(1), ' ')) {
        if (token.empty()) continue;
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw std::runtime_error("parse_csv: bad metadata token " + token);
        table.metadata.emplace_back(token.substr(0, eq), token.substr(eq + 1));
    }
    if (!std::getline(in, line)) throw std::runtime_error("parse_csv: missing header");
    table.columns = split(line, ',');
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        for (const auto& cell : split(line, ',')) {
            double v = 0.0;
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc{}) throw std::runtime_error("parse_csv: bad number " + cell);
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace subdiff::report
