#pragma once

// Turns a command's JSON result into text, JSON or CSV.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "quadratica/serialize.hpp"

namespace qcli {

using quadratica::json;

enum class Format { Text, Json, Csv };

struct OutputConfig {
    Format format = Format::Text;
    int precision = 12;
};

inline std::string fmt_double(double v, int precision)
{
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

/// A double rounded to `precision` significant digits.
inline json num(double v, int precision)
{
    return std::stod(fmt_double(v, precision));
}

inline bool is_rational_obj(const json& j)
{
    return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den");
}

inline bool is_quad_obj(const json& j)
{
    return j.is_object() && j.contains("a") && j.contains("b") && j.contains("m") && j.contains("text");
}

inline bool is_leaf(const json& j)
{
    return !j.is_structured() || is_rational_obj(j) || is_quad_obj(j) ||
           (j.is_object() && j.size() == 4 && j.contains("text") && j.contains("c"));
}

inline std::string leaf_text(const json& j, int precision)
{
    if (is_rational_obj(j)) {
        const std::string den = j["den"].get<std::string>();
        return den == "1" ? j["num"].get<std::string>() : j["num"].get<std::string>() + "/" + den;
    }
    if (j.is_object() && j.contains("text")) {
        return j["text"].get<std::string>();
    }
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (j.is_number_float()) {
        return fmt_double(j.get<double>(), precision);
    }
    if (j.is_null()) {
        return "-";
    }
    if (j.is_structured()) {
        return j.dump();
    }
    return j.dump();
}

inline bool is_row_array(const json& j)
{
    return j.is_array() && !j.empty() && j.front().is_object() && !is_leaf(j.front());
}

inline void render_table(std::ostream& os, const json& rows, int precision, const std::string& pad)
{
    std::vector<std::string> cols;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
        cols.push_back(it.key());
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        width[c] = cols[c].size();
    }
    for (const json& r : rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            line.push_back(r.contains(cols[c]) ? leaf_text(r[cols[c]], precision) : "");
            width[c] = std::max(width[c], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
        os << pad;
        for (std::size_t c = 0; c < line.size(); ++c) {
            os << std::left << std::setw(static_cast<int>(width[c])) << line[c] << (c + 1 < line.size() ? "  " : "");
        }
        os << "\n";
    };
    emit(cols);
    for (const auto& line : cells) {
        emit(line);
    }
}

inline void render_text(std::ostream& os, const json& j, int precision, const std::string& pad = "")
{
    if (is_leaf(j)) {
        os << pad << leaf_text(j, precision) << "\n";
        return;
    }
    if (is_row_array(j)) {
        render_table(os, j, precision, pad);
        return;
    }
    if (j.is_array()) {
        for (const json& v : j) {
            render_text(os, v, precision, pad + "- ");
        }
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (is_leaf(v)) {
            os << pad << it.key() << ": " << leaf_text(v, precision) << "\n";
        } else if (v.is_array() && (v.empty() || is_leaf(v.front()))) {
            os << pad << it.key() << ": ";
            for (std::size_t i = 0; i < v.size(); ++i) {
                os << (i ? ", " : "") << leaf_text(v[i], precision);
            }
            os << "\n";
        } else {
            os << pad << it.key() << ":\n";
            render_text(os, v, precision, pad + "  ");
        }
    }
}

inline std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

/// The first array of row objects (depth-first) becomes the CSV body;
/// otherwise leaves are written as key,value pairs.
inline const json* find_rows(const json& j)
{
    if (is_row_array(j)) {
        return &j;
    }
    if (j.is_object()) {
        if (j.contains("rows") && is_row_array(j["rows"])) {
            return &j["rows"];
        }
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (const json* r = find_rows(it.value())) {
                return r;
            }
        }
    }
    return nullptr;
}

inline void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, const json*>>& out)
{
    if (is_leaf(j)) {
        out.emplace_back(prefix, &j);
        return;
    }
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        const std::string key = j.is_array() ? std::to_string(i) : it.key();
        flatten(it.value(), prefix.empty() ? key : prefix + "." + key, out);
    }
}

inline void render_csv(std::ostream& os, const json& j, int precision)
{
    if (const json* rows = find_rows(j)) {
        std::vector<std::string> cols;
        for (auto it = rows->front().begin(); it != rows->front().end(); ++it) {
            cols.push_back(it.key());
        }
        for (std::size_t c = 0; c < cols.size(); ++c) {
            os << (c ? "," : "") << csv_cell(cols[c]);
        }
        os << "\n";
        for (const json& r : *rows) {
            for (std::size_t c = 0; c < cols.size(); ++c) {
                os << (c ? "," : "") << csv_cell(r.contains(cols[c]) ? leaf_text(r[cols[c]], precision) : "");
            }
            os << "\n";
        }
        return;
    }
    std::vector<std::pair<std::string, const json*>> flat;
    flatten(j, "", flat);
    os << "key,value\n";
    for (const auto& [k, v] : flat) {
        os << csv_cell(k) << "," << csv_cell(leaf_text(*v, precision)) << "\n";
    }
}

inline void render(std::ostream& os, const json& j, const OutputConfig& cfg)
{
    switch (cfg.format) {
    case Format::Json: os << j.dump(2) << "\n"; break;
    case Format::Csv: render_csv(os, j, cfg.precision); break;
    case Format::Text: render_text(os, j, cfg.precision); break;
    }
}

} // namespace qcli
