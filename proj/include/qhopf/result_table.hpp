#ifndef QHOPF_RESULT_TABLE_HPP
#define QHOPF_RESULT_TABLE_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qhopf {

// Tabular experiment output with a metadata block. Formatting is fixed
// (17 significant digits, '.' decimal separator, '\n' line endings) so
// identical configs produce byte-identical files.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> meta;  // insertion order

    void add_row(std::vector<double> row);
    void add_meta(const std::string& key, const std::string& value);
    void add_meta(const std::string& key, double value);

    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
};

// %.17g with '.' decimal separator regardless of locale.
std::string format_double(double value);

}  // namespace qhopf

#endif
