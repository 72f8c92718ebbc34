#include "qhopf/result_table.hpp"

#include <cstdio>
#include <stdexcept>

namespace qhopf {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

std::string csv_quote(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') { out += "\\n"; continue; }
        out += c;
    }
    return out;
}

}  // namespace

void ResultTable::add_row(std::vector<double> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("ResultTable: row width != column count");
    rows.push_back(std::move(row));
}

void ResultTable::add_meta(const std::string& key, const std::string& value) {
    meta.emplace_back(key, value);
}

void ResultTable::add_meta(const std::string& key, double value) {
    meta.emplace_back(key, format_double(value));
}

void ResultTable::write_csv(std::ostream& os) const {
    for (const auto& [k, v] : meta)
        os << "# " << csv_quote(k) << "," << csv_quote(v) << "\n";
    for (size_t i = 0; i < columns.size(); ++i)
        os << (i ? "," : "") << csv_quote(columns[i]);
    os << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_double(row[i]);
        os << "\n";
    }
}

void ResultTable::write_json(std::ostream& os) const {
    os << "{\n  \"meta\": {";
    for (size_t i = 0; i < meta.size(); ++i)
        os << (i ? ", " : "") << "\"" << json_escape(meta[i].first) << "\": \""
           << json_escape(meta[i].second) << "\"";
    os << "},\n  \"columns\": [";
    for (size_t i = 0; i < columns.size(); ++i)
        os << (i ? ", " : "") << "\"" << json_escape(columns[i]) << "\"";
    os << "],\n  \"rows\": [\n";
    for (size_t r = 0; r < rows.size(); ++r) {
        os << "    [";
        for (size_t i = 0; i < rows[r].size(); ++i)
            os << (i ? ", " : "") << format_double(rows[r][i]);
        os << "]" << (r + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
}

}  // namespace qhopf
