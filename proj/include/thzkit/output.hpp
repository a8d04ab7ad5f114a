#pragma once

// Tabular output records written as CSV (with a `#` provenance line) or JSON.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "thzkit/errors.hpp"

namespace thzkit {

inline constexpr const char* kVersion = "0.1.0";

enum class OutputFormat { csv, json };

struct OutputRecord {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    /// Command and parameters, in insertion order, for the provenance header.
    std::vector<std::pair<std::string, std::string>> meta;
    /// Scalar results reported alongside the rows (e.g. phase coverage).
    std::vector<std::pair<std::string, double>> summary;

    void add_row(std::vector<double> row) {
        if (row.size() != columns.size()) throw Error("output row arity does not match the header");
        rows.push_back(std::move(row));
    }
};

/// 12 significant digits; integers print without a trailing exponent.
inline std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline void write_csv(std::ostream& os, const OutputRecord& rec) {
    os << "# thzkit " << kVersion;
    for (const auto& [k, v] : rec.meta) os << ' ' << k << '=' << v;
    os << '\n';
    for (std::size_t i = 0; i < rec.columns.size(); ++i) os << (i ? "," : "") << rec.columns[i];
    os << '\n';
    for (const auto& row : rec.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
        os << '\n';
    }
    for (const auto& [k, v] : rec.summary) os << "# " << k << '=' << format_number(v) << '\n';
}

inline nlohmann::ordered_json to_json(const OutputRecord& rec) {
    using json = nlohmann::ordered_json;
    auto number = [](double v) -> json {
        if (!std::isfinite(v)) return format_number(v);
        return json::parse(format_number(v));
    };
    json meta = json::object();
    meta["tool"] = "thzkit";
    meta["version"] = kVersion;
    for (const auto& [k, v] : rec.meta) meta[k] = v;
    json out = json::object();
    out["meta"] = meta;
    for (const auto& [k, v] : rec.summary) out[k] = number(v);
    out["columns"] = rec.columns;
    json rows = json::array();
    for (const auto& row : rec.rows) {
        json r = json::array();
        for (double v : row) r.push_back(number(v));
        rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    return out;
}

/// Single-row records print as one flat JSON object.
inline void write_json(std::ostream& os, const OutputRecord& rec) {
    auto j = to_json(rec);
    if (rec.rows.size() == 1) {
        nlohmann::ordered_json flat = nlohmann::ordered_json::object();
        flat["meta"] = j["meta"];
        for (const auto& [k, v] : rec.summary) flat[k] = j[k];
        for (std::size_t i = 0; i < rec.columns.size(); ++i) flat[rec.columns[i]] = j["rows"][0][i];
        j = std::move(flat);
    }
    os << j.dump(2) << '\n';
}

inline void write(std::ostream& os, const OutputRecord& rec, OutputFormat fmt) {
    if (fmt == OutputFormat::csv) write_csv(os, rec); else write_json(os, rec);
}

}  // namespace thzkit
