#pragma once

// Homogenized hypersurface cell: a graphene sheet (conductivity scaled by
// the patch fill factor) on a lossless grounded slab, seen as a shunt
// admittance at the top of a shorted transmission-line section.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "thzkit/errors.hpp"
#include "thzkit/materials.hpp"
#include "thzkit/quantities.hpp"

namespace thzkit {

enum class Polarization { TE, TM };

struct HsfCell {
    double slab_thickness = 0.0;          // m
    double slab_rel_permittivity = 11.9;  // silicon
    double fill_factor = 1.0;
    GrapheneParams graphene{};
};

struct ReflectionSample {
    Complex gamma;
    double efficiency;  // |gamma|^2
    double phase_deg;   // (-180, 180]
};

inline void validate(const HsfCell& cell) {
    detail::require(cell.slab_thickness > 0.0, "slab thickness must be positive");
    detail::require(cell.slab_rel_permittivity >= 1.0, "slab permittivity must be >= 1");
    detail::require(cell.fill_factor > 0.0 && cell.fill_factor <= 1.0, "fill factor must lie in (0, 1]");
    validate(cell.graphene);
}

namespace detail {

struct SlabLine {
    double kz;  // rad/m
    double zd;  // ohm, modal impedance in the slab
};

inline SlabLine slab_line(double f, const HsfCell& cell, double theta, Polarization pol) {
    require(f > 0.0, "frequency must be positive");
    require(theta >= 0.0 && theta < constants::pi / 2.0, "incidence angle must lie in [0, pi/2)");
    const double k0 = free_space_wavenumber(f);
    const double s = std::sin(theta);
    const double kz = k0 * std::sqrt(std::max(0.0, cell.slab_rel_permittivity - s * s));
    if (kz <= 1e-12 * k0) throw GrazingError("normal wavenumber in the slab vanishes");
    const double eta0 = constants::eta0;
    const double zd = pol == Polarization::TE ? eta0 * k0 / kz : eta0 * kz / (cell.slab_rel_permittivity * k0);
    return {kz, zd};
}

inline double air_impedance(double theta, Polarization pol) {
    return pol == Polarization::TE ? constants::eta0 / std::cos(theta) : constants::eta0 * std::cos(theta);
}

/// Input admittance Y_sheet + Y_slab. `infinite` flags a slab that is an
/// electrical short (tan(kz t) = 0), where the admittance diverges.
struct InputAdmittance {
    Complex y;
    bool infinite;
};

inline InputAdmittance input_admittance(double f, const HsfCell& cell, double theta, Polarization pol,
                                        double fill_factor) {
    const auto line = slab_line(f, cell, theta, pol);
    const double t = std::tan(line.kz * cell.slab_thickness);
    if (t == 0.0) return {{}, true};
    const Complex y_slab = 1.0 / (kJ * line.zd * t);
    const Complex y_sheet = fill_factor > 0.0 ? fill_factor * graphene_sigma_intra(f, cell.graphene) : Complex{};
    return {y_slab + y_sheet, false};
}

}  // namespace detail

/// Z_in = Z_sheet || j Z_d tan(kz t), Z_sheet = 1/(fill sigma_s).
inline Complex cell_input_impedance(double f, const HsfCell& cell, double theta, Polarization pol) {
    validate(cell);
    const auto y = detail::input_admittance(f, cell, theta, pol, cell.fill_factor);
    if (y.infinite) return {};
    if (y.y == Complex{}) return {std::numeric_limits<double>::infinity(), 0.0};
    return 1.0 / y.y;
}

/// Input impedance of the bare grounded slab (fill factor -> 0).
inline Complex slab_input_impedance(double f, const HsfCell& cell, double theta, Polarization pol) {
    const auto line = detail::slab_line(f, cell, theta, pol);
    return kJ * line.zd * std::tan(line.kz * cell.slab_thickness);
}

inline ReflectionSample reflection(double f, const HsfCell& cell, double theta, Polarization pol) {
    validate(cell);
    const auto y = detail::input_admittance(f, cell, theta, pol, cell.fill_factor);
    // Gamma = (Z_in - Z_air)/(Z_in + Z_air) = (Y_air - Y_in)/(Y_air + Y_in).
    Complex gamma{-1.0, 0.0};
    if (!y.infinite) {
        const double y_air = 1.0 / detail::air_impedance(theta, pol);
        gamma = (y_air - y.y) / (y_air + y.y);
    }
    double phase = std::arg(gamma) * 180.0 / constants::pi;
    if (phase <= -180.0) phase += 360.0;
    return {gamma, std::norm(gamma), phase};
}

/// Unwrapped span of the reflection phase over a chemical-potential sweep
/// (values in J), capped at one full turn.
inline double phase_coverage(double f, const HsfCell& cell_template, std::span<const double> mu_c_values,
                             double theta, Polarization pol) {
    detail::require(mu_c_values.size() >= 2, "phase coverage needs at least two bias values");
    HsfCell cell = cell_template;
    double prev = 0.0;
    double unwrapped = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < mu_c_values.size(); ++i) {
        cell.graphene.mu_c = mu_c_values[i];
        const double phase = reflection(f, cell, theta, pol).phase_deg;
        if (i == 0) {
            unwrapped = phase;
            lo = hi = phase;
        } else {
            double delta = phase - prev;
            while (delta > 180.0) delta -= 360.0;
            while (delta < -180.0) delta += 360.0;
            unwrapped += delta;
            lo = std::min(lo, unwrapped);
            hi = std::max(hi, unwrapped);
        }
        prev = phase;
    }
    return std::min(hi - lo, 360.0);
}

/// Slab thickness at which the lossless (tau -> inf) cell biased at mu_design
/// is anti-resonant (Y_in = 0) at f under normal incidence:
///   tan(kz t) = -w / (Z_d fill D),  sigma_lossless = -j D / w.
inline double resonant_slab_thickness(double f, const HsfCell& cell, double mu_design) {
    detail::require(f > 0.0, "frequency must be positive");
    GrapheneParams lossless = cell.graphene;
    lossless.mu_c = mu_design;
    lossless.tau = 1e300;
    const double w = angular(f);
    const double drude_weight = -graphene_sigma_intra(f, lossless).imag() * w;
    const double kz = free_space_wavenumber(f) * std::sqrt(cell.slab_rel_permittivity);
    const double zd = constants::eta0 / std::sqrt(cell.slab_rel_permittivity);
    return (constants::pi - std::atan(w / (zd * cell.fill_factor * drude_weight))) / kz;
}

/// Default cell: continuous graphene (fill 1) with tau = 1 ps on silicon,
/// thickness set so the lossless cell resonates at 1 THz under 0.4 eV bias,
/// operated at 0.2 eV.
inline HsfCell fig4_cell() {
    HsfCell cell;
    cell.slab_rel_permittivity = 11.9;
    cell.fill_factor = 1.0;
    cell.graphene = GrapheneParams{0.2 * constants::e, 1e-12, 300.0};
    cell.slab_thickness = resonant_slab_thickness(1e12, cell, 0.4 * constants::e);
    return cell;
}

}  // namespace thzkit
