#include "txcap/csv.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace txcap {

namespace {

std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
    f << body;
    if (!f) throw std::invalid_argument("failed writing '" + path + "'");
}

}  // namespace

void CurveSeries::add_column(const std::string& label, std::vector<double> values) {
    columns.emplace_back(label, std::move(values));
}

void CurveSeries::add_meta(const std::string& key, const std::string& value) { metadata.emplace_back(key, value); }

void CurveSeries::add_note(const std::string& key, const std::string& value) { notes.emplace_back(key, value); }

void CurveSeries::validate() const {
    if (name.empty()) throw std::invalid_argument("series name must not be empty");
    for (const auto& [label, v] : columns)
        if (v.size() != x.size())
            throw std::invalid_argument("column '" + label + "' has " + std::to_string(v.size()) + " rows, expected " +
                                        std::to_string(x.size()));
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const CurveSeries& s) {
    s.validate();
    std::string out = quote(s.x_label);
    for (const auto& c : s.columns) out += "," + quote(c.first);
    out += "\r\n";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        out += format_double(s.x[i]);
        for (const auto& c : s.columns) out += "," + format_double(c.second[i]);
        out += "\r\n";
    }
    return out;
}

std::string to_meta(const CurveSeries& s) {
    std::string out = "# " + s.name + "\n";
    for (const auto& [k, v] : s.notes) out += "# " + k + ": " + v + "\n";
    for (const auto& [k, v] : s.metadata) out += k + " = " + v + "\n";
    return out;
}

std::string write_series(const CurveSeries& s, const std::string& dir) {
    std::filesystem::create_directories(dir.empty() ? "." : dir);
    const std::string path = (std::filesystem::path(dir.empty() ? "." : dir) / (s.name + ".csv")).string();
    write_file(path, to_csv(s));
    write_file(path + ".meta", to_meta(s));
    return path;
}

}  // namespace txcap
