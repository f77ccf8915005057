#pragma once

#include <string>
#include <utility>
#include <vector>

namespace txcap {

// Named table (x, y_1..y_k) plus the parameters needed to regenerate it.
struct CurveSeries {
    std::string name;
    std::string x_label;
    std::vector<double> x;
    std::vector<std::pair<std::string, std::vector<double>>> columns;
    // Flag values that regenerate the table.
    std::vector<std::pair<std::string, std::string>> metadata;
    // Descriptive entries (regime tags, command); written as comments.
    std::vector<std::pair<std::string, std::string>> notes;

    void add_column(const std::string& label, std::vector<double> values);
    void add_meta(const std::string& key, const std::string& value);
    void add_note(const std::string& key, const std::string& value);
    void validate() const;
};

// %.17g, with inf / -inf / nan spelled out.
std::string format_double(double v);

// RFC-4180 table with CRLF line endings.
std::string to_csv(const CurveSeries& s);
// "key = value" lines, readable back through --config.
std::string to_meta(const CurveSeries& s);

// Writes <dir>/<name>.csv and <dir>/<name>.csv.meta; returns the csv path.
std::string write_series(const CurveSeries& s, const std::string& dir);

}  // namespace txcap
