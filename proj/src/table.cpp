#include "tcphonon/table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace tcphonon {

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(const std::vector<double>& row)
{
    if (row.size() != columns_.size()) {
        throw std::invalid_argument("Table::add_row: row width does not match the header");
    }
    rows_.push_back(row);
}

std::string format_double(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, v, std::chars_format::general, 17);
    return std::string(buffer, result.ptr);
}

void Table::write_csv(std::ostream& out) const
{
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        out << (i ? "," : "") << columns_[i];
    }
    out << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << format_double(row[i]);
        }
        out << '\n';
    }
}

void Table::write_json(std::ostream& out) const
{
    nlohmann::ordered_json doc;
    doc["metadata"] = metadata_;
    nlohmann::ordered_json cols = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        nlohmann::ordered_json values = nlohmann::ordered_json::array();
        for (const auto& row : rows_) {
            // JSON has no NaN/inf
            values.push_back(std::isfinite(row[c]) ? nlohmann::ordered_json(row[c]) : nlohmann::ordered_json());
        }
        cols[columns_[c]] = std::move(values);
    }
    doc["columns"] = std::move(cols);
    out << doc.dump(2) << '\n';
}

}  // namespace tcphonon
