#pragma once

// THz path loss: free-space spreading plus table-driven molecular absorption,
// both in dB, A(f, d) = A_ma(f, d) + A_s(f, d).

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "thzkit/errors.hpp"
#include "thzkit/quantities.hpp"

namespace thzkit {

/// Absorption coefficient K(f) in 1/m, linearly interpolated between rows.
class AbsorptionTable {
public:
    struct Row {
        double f;  // Hz
        double k;  // 1/m
    };

    AbsorptionTable() = default;

    explicit AbsorptionTable(std::vector<Row> rows) : rows_(std::move(rows)) {
        if (rows_.empty()) throw DomainError("absorption table needs at least one row");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (!(rows_[i].k >= 0.0)) throw DomainError("absorption coefficients must be nonnegative");
            if (i > 0 && !(rows_[i].f > rows_[i - 1].f)) {
                throw DomainError("absorption table frequencies must be strictly increasing");
            }
        }
    }

    /// A table with K = 0 everywhere, used when no absorption data is given.
    static AbsorptionTable transparent() { return AbsorptionTable({{0.0, 0.0}, {1e300, 0.0}}); }

    /// CSV with a required `f_hz,k_per_m` header; `#` lines and blanks are skipped.
    static AbsorptionTable from_csv(std::istream& in) {
        std::string line;
        bool header = false;
        std::vector<Row> rows;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            const auto body = detail::trim(line);
            if (body.empty() || body.front() == '#') continue;
            if (!header) {
                std::string compact;
                for (char c : body) if (c != ' ' && c != '\t') compact.push_back(c);
                if (compact != "f_hz,k_per_m") throw ParseError("absorption CSV must start with header f_hz,k_per_m");
                header = true;
                continue;
            }
            const auto comma = body.find(',');
            if (comma == std::string_view::npos) {
                throw ParseError("absorption CSV line " + std::to_string(line_no) + ": expected two columns");
            }
            const auto f = parse_quantity(body.substr(0, comma));
            const auto k = parse_quantity(body.substr(comma + 1));
            if (f.unit != Unit::none || k.unit != Unit::none) {
                throw ParseError("absorption CSV line " + std::to_string(line_no) + ": bare SI numbers expected");
            }
            rows.push_back({f.value, k.value});
        }
        if (!header) throw ParseError("absorption CSV is missing the f_hz,k_per_m header");
        return AbsorptionTable(std::move(rows));
    }

    static AbsorptionTable load_csv(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open absorption file '" + path + "'");
        return from_csv(in);
    }

    const std::vector<Row>& rows() const { return rows_; }

    double coefficient(double f) const {
        if (rows_.empty()) throw DomainError("empty absorption table");
        if (f < rows_.front().f || f > rows_.back().f) {
            throw OutOfRangeError("frequency outside the absorption table range");
        }
        auto it = std::lower_bound(rows_.begin(), rows_.end(), f, [](const Row& r, double x) { return r.f < x; });
        if (it->f == f) return it->k;
        const Row& b = *it;
        const Row& a = *(it - 1);
        const double t = (f - a.f) / (b.f - a.f);
        return a.k + t * (b.k - a.k);
    }

private:
    std::vector<Row> rows_;
};

struct LinkParams {
    double f;           // Hz
    double d;           // m
    double p_tx = 0.0;  // dBm
    double g_tx = 0.0;  // dBi
    double g_rx = 0.0;  // dBi
};

/// Friis spreading loss, 20 log10(4 pi f d / c0).
inline double spreading_loss_db(double f, double d) {
    detail::require(f > 0.0 && d > 0.0, "frequency and distance must be positive");
    return 20.0 * std::log10(4.0 * constants::pi * f * d / constants::c0);
}

/// Beer-Lambert attenuation exp(K d) in dB.
inline double absorption_loss_db(double f, double d, const AbsorptionTable& table) {
    detail::require(f > 0.0 && d > 0.0, "frequency and distance must be positive");
    return 10.0 * std::log10(std::exp(1.0)) * table.coefficient(f) * d;
}

inline double total_path_loss_db(double f, double d, const AbsorptionTable& table) {
    return absorption_loss_db(f, d, table) + spreading_loss_db(f, d);
}

inline double received_power_dbm(const LinkParams& link, const AbsorptionTable& table) {
    return link.p_tx + link.g_tx + link.g_rx - total_path_loss_db(link.f, link.d, table);
}

}  // namespace thzkit
