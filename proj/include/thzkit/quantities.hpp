#pragma once

// Physical constants, unit-tagged quantities and the complex convention.
//
// Every quantity is carried in SI inside the library. Units such as eV, THz
// or um only appear when text is parsed or formatted at the I/O boundary.
//
// Complex values follow the e^{+jwt} time convention: an inductive
// reactance has a positive imaginary part, and a lossy wave written as
// e^{-jkx} has im(k) < 0.

#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <string_view>
#include <system_error>

#include "thzkit/errors.hpp"

namespace thzkit {

using Complex = std::complex<double>;

inline constexpr Complex kJ{0.0, 1.0};

/// CODATA 2018.
namespace constants {
inline constexpr double pi = std::numbers::pi;
inline constexpr double e = 1.602176634e-19;       // C
inline constexpr double hbar = 1.054571817e-34;    // J s
inline constexpr double kB = 1.380649e-23;         // J/K
inline constexpr double eps0 = 8.8541878128e-12;   // F/m
inline constexpr double mu0 = 1.25663706212e-6;    // H/m
inline constexpr double c0 = 299792458.0;          // m/s
inline constexpr double m_e = 9.1093837015e-31;    // kg
inline const double eta0 = std::sqrt(mu0 / eps0);  // ohm
}  // namespace constants

enum class Dimension {
    dimensionless,
    frequency,
    length,
    energy,
    voltage,
    temperature,
    time,
    conductance,
    resistance,
    capacitance_per_area,
    areal_density,
    field,
    angle,
    log_ratio,
    log_gain,
    log_power,
};

enum class Unit {
    none,
    Hz, kHz, MHz, GHz, THz,
    m, mm, um, nm,
    eV, meV, J,
    V,
    K,
    s, ns, ps, fs,
    S, mS,
    ohm,
    F_per_m2,
    per_cm2, per_m2,
    V_per_m, MV_per_cm,
    rad, deg,
    dB, dBi, dBm,
};

struct UnitInfo {
    Unit unit;
    std::string_view symbol;
    Dimension dimension;
    double to_si;
};

namespace detail {

// First entry per unit is its canonical symbol; later ones are aliases.
inline constexpr std::array<UnitInfo, 41> kUnits{{
    {Unit::none, "", Dimension::dimensionless, 1.0},
    {Unit::Hz, "Hz", Dimension::frequency, 1.0},
    {Unit::kHz, "kHz", Dimension::frequency, 1e3},
    {Unit::MHz, "MHz", Dimension::frequency, 1e6},
    {Unit::GHz, "GHz", Dimension::frequency, 1e9},
    {Unit::THz, "THz", Dimension::frequency, 1e12},
    {Unit::m, "m", Dimension::length, 1.0},
    {Unit::mm, "mm", Dimension::length, 1e-3},
    {Unit::um, "μm", Dimension::length, 1e-6},
    {Unit::um, "um", Dimension::length, 1e-6},
    {Unit::um, "µm", Dimension::length, 1e-6},
    {Unit::nm, "nm", Dimension::length, 1e-9},
    {Unit::eV, "eV", Dimension::energy, constants::e},
    {Unit::meV, "meV", Dimension::energy, 1e-3 * constants::e},
    {Unit::J, "J", Dimension::energy, 1.0},
    {Unit::V, "V", Dimension::voltage, 1.0},
    {Unit::K, "K", Dimension::temperature, 1.0},
    {Unit::s, "s", Dimension::time, 1.0},
    {Unit::ns, "ns", Dimension::time, 1e-9},
    {Unit::ps, "ps", Dimension::time, 1e-12},
    {Unit::fs, "fs", Dimension::time, 1e-15},
    {Unit::S, "S", Dimension::conductance, 1.0},
    {Unit::mS, "mS", Dimension::conductance, 1e-3},
    {Unit::ohm, "Ω", Dimension::resistance, 1.0},
    {Unit::ohm, "ohm", Dimension::resistance, 1.0},
    {Unit::F_per_m2, "F/m²", Dimension::capacitance_per_area, 1.0},
    {Unit::F_per_m2, "F/m2", Dimension::capacitance_per_area, 1.0},
    {Unit::per_cm2, "cm⁻²", Dimension::areal_density, 1e4},
    {Unit::per_cm2, "cm^-2", Dimension::areal_density, 1e4},
    {Unit::per_cm2, "/cm2", Dimension::areal_density, 1e4},
    {Unit::per_m2, "m⁻²", Dimension::areal_density, 1.0},
    {Unit::per_m2, "m^-2", Dimension::areal_density, 1.0},
    {Unit::per_m2, "/m2", Dimension::areal_density, 1.0},
    {Unit::V_per_m, "V/m", Dimension::field, 1.0},
    {Unit::MV_per_cm, "MV/cm", Dimension::field, 1e8},
    {Unit::rad, "rad", Dimension::angle, 1.0},
    {Unit::deg, "deg", Dimension::angle, constants::pi / 180.0},
    {Unit::deg, "°", Dimension::angle, constants::pi / 180.0},
    {Unit::dB, "dB", Dimension::log_ratio, 1.0},
    {Unit::dBi, "dBi", Dimension::log_gain, 1.0},
    {Unit::dBm, "dBm", Dimension::log_power, 1.0},
}};

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace detail

inline const UnitInfo& unit_info(Unit u) {
    for (const auto& info : detail::kUnits) {
        if (info.unit == u) return info;
    }
    throw UnitError("unregistered unit");
}

inline std::string_view unit_symbol(Unit u) { return unit_info(u).symbol; }

inline Dimension unit_dimension(Unit u) { return unit_info(u).dimension; }

inline Unit unit_from_symbol(std::string_view symbol) {
    if (symbol.empty()) return Unit::none;
    for (const auto& info : detail::kUnits) {
        if (!info.symbol.empty() && info.symbol == symbol) return info.unit;
    }
    throw UnitError("unknown unit '" + std::string(symbol) + "'");
}

struct Quantity {
    double value = 0.0;
    Unit unit = Unit::none;

    double to_si() const { return value * unit_info(unit).to_si; }
    Dimension dimension() const { return unit_dimension(unit); }
};

/// Parses `<number><unit>`, e.g. "1THz", "0.3 eV", "24.4nm". A bare number
/// yields Unit::none.
inline Quantity parse_quantity(std::string_view text) {
    const auto body = detail::trim(text);
    if (body.empty()) throw ParseError("empty quantity");
    const char* first = body.data();
    const char* last = body.data() + body.size();
    if (*first == '+') ++first;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) {
        throw ParseError("malformed number in '" + std::string(body) + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError("non-finite number in '" + std::string(body) + "'");
    }
    const auto suffix = detail::trim(std::string_view(ptr, static_cast<std::size_t>(last - ptr)));
    return Quantity{value, unit_from_symbol(suffix)};
}

/// Parses text and returns its SI value. A bare number is taken to be in
/// `default_unit`; an explicit unit must match `expected` dimension.
inline double parse_si(std::string_view text, Dimension expected, Unit default_unit = Unit::none) {
    auto q = parse_quantity(text);
    if (q.unit == Unit::none) q.unit = default_unit;
    if (q.dimension() != expected) {
        throw UnitError("'" + std::string(detail::trim(text)) + "' has the wrong dimension");
    }
    return q.to_si();
}

/// Round-trip text form: 17 significant digits followed by the canonical symbol.
inline std::string format(const Quantity& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", q.value);
    return std::string(buf) + std::string(unit_symbol(q.unit));
}

inline double db_from_power_ratio(double ratio) {
    if (!(ratio > 0.0)) throw DomainError("power ratio must be positive");
    return 10.0 * std::log10(ratio);
}

inline double ev_to_joule(double ev) { return ev * constants::e; }
inline double joule_to_ev(double j) { return j / constants::e; }

}  // namespace thzkit
