#pragma once

// Default material, gate and antenna parameters, overridable from a
// `name = value` file (`#` starts a comment). Values may carry units
// ("0.3eV", "2.5e-14 s"); bare numbers are SI.

#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>

#include "thzkit/antenna.hpp"
#include "thzkit/errors.hpp"
#include "thzkit/gating.hpp"
#include "thzkit/materials.hpp"
#include "thzkit/plasmonics.hpp"
#include "thzkit/quantities.hpp"

namespace thzkit {

struct Settings {
    GrapheneParams graphene{};
    double graphene_vf = 1.0e6;  // m/s, used by the gate chain
    CntParams cnt{};
    CopperParams copper{};
    double gate_cox = kTable2Cox;
    double gate_eps_r = 3.9;
    DielectricEnvironment antenna_env{1.0, 3.9};
    CntLineGeometry cnt_line{};

    GateStack table2() const { return GateStack::from_capacitance(gate_cox, gate_eps_r, graphene_vf); }
};

namespace detail {

struct ConfigKey {
    Dimension dim;
    std::function<void(Settings&, double)> apply;
};

inline const std::map<std::string, ConfigKey>& config_keys() {
    static const std::map<std::string, ConfigKey> keys{
        {"graphene.mu_c", {Dimension::energy, [](Settings& s, double v) { s.graphene.mu_c = v; }}},
        {"graphene.tau", {Dimension::time, [](Settings& s, double v) { s.graphene.tau = v; }}},
        {"graphene.temp", {Dimension::temperature, [](Settings& s, double v) { s.graphene.temp = v; }}},
        {"graphene.vf", {Dimension::dimensionless, [](Settings& s, double v) { s.graphene_vf = v; }}},
        {"cnt.radius", {Dimension::length, [](Settings& s, double v) { s.cnt.radius = v; }}},
        {"cnt.vf", {Dimension::dimensionless, [](Settings& s, double v) { s.cnt.vf = v; }}},
        {"cnt.tau", {Dimension::time, [](Settings& s, double v) { s.cnt.tau = v; }}},
        {"copper.sigma0", {Dimension::dimensionless, [](Settings& s, double v) { s.copper.sigma0 = v; }}},
        {"copper.tau", {Dimension::time, [](Settings& s, double v) { s.copper.tau = v; }}},
        {"gate.cox", {Dimension::capacitance_per_area, [](Settings& s, double v) { s.gate_cox = v; }}},
        {"gate.eps_r", {Dimension::dimensionless, [](Settings& s, double v) { s.gate_eps_r = v; }}},
        {"antenna.eps1", {Dimension::dimensionless, [](Settings& s, double v) { s.antenna_env.eps1 = v; }}},
        {"antenna.eps2", {Dimension::dimensionless, [](Settings& s, double v) { s.antenna_env.eps2 = v; }}},
        {"antenna.cnt_height_ratio",
         {Dimension::dimensionless, [](Settings& s, double v) { s.cnt_line.height_ratio = v; }}},
    };
    return keys;
}

}  // namespace detail

/// Applies every `name = value` line of `in` to `settings`.
inline void apply_config(Settings& settings, std::istream& in) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = line;
        if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        body = detail::trim(body);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        const std::string where = "config line " + std::to_string(line_no);
        if (eq == std::string_view::npos) throw ConfigError(where + ": expected name = value");
        const std::string key(detail::trim(body.substr(0, eq)));
        const auto value = detail::trim(body.substr(eq + 1));
        const auto& keys = detail::config_keys();
        const auto it = keys.find(key);
        if (it == keys.end()) throw ConfigError(where + ": unknown key '" + key + "'");
        Quantity q;
        try {
            q = parse_quantity(value);
        } catch (const Error& e) {
            throw ConfigError(where + ": " + e.what());
        }
        if (q.unit != Unit::none && q.dimension() != it->second.dim) {
            throw ConfigError(where + ": wrong unit for '" + key + "'");
        }
        const double v = q.to_si();
        it->second.apply(settings, v);
    }
}

inline void apply_config_file(Settings& settings, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    apply_config(settings, in);
}

}  // namespace thzkit
