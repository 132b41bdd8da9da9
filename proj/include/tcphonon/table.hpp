#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

namespace tcphonon {

// Column-oriented numeric table with a metadata record. CSV output is a single
// header row and comma-separated values with 17 significant digits, independent
// of the global locale; JSON mirrors the columns as named arrays.
class Table {
public:
    explicit Table(std::vector<std::string> columns);

    void add_row(const std::vector<double>& row);

    const std::vector<std::string>& columns() const { return columns_; }
    std::size_t rows() const { return rows_.size(); }
    const std::vector<double>& row(std::size_t i) const { return rows_[i]; }

    nlohmann::ordered_json& metadata() { return metadata_; }
    const nlohmann::ordered_json& metadata() const { return metadata_; }

    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
    nlohmann::ordered_json metadata_ = nlohmann::ordered_json::object();
};

// Locale-independent %.17g.
std::string format_double(double v);

}  // namespace tcphonon
