#pragma once

// Resonance estimates for dipole nanoantennas made of graphene, CNT or
// copper, gate-tuning curves, and a classical dipole directivity integrator.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include "thzkit/errors.hpp"
#include "thzkit/gating.hpp"
#include "thzkit/materials.hpp"
#include "thzkit/plasmonics.hpp"
#include "thzkit/quantities.hpp"

namespace thzkit {

/// Transmission-line closure for a CNT above the substrate-equivalent ground.
struct CntLineGeometry {
    double height_ratio = 100.0;  // h / r
};

struct AntennaSpec {
    MaterialModel material = GrapheneParams{};
    double length = 68e-6;  // m
    DielectricEnvironment env{1.0, 3.9};
    int mode_order = 1;
    CntLineGeometry cnt{};
};

struct ResonancePoint {
    double f_r;             // Hz
    double lambda_eff;      // m
    double miniaturization; // lambda0(f_r) / length
};

/// Electrostatic capacitance per unit length, 2 pi eps0 eps_avg / ln(2h/r).
/// With h a fixed multiple of r the radius drops out.
inline double cnt_line_capacitance([[maybe_unused]] const CntParams& p, const DielectricEnvironment& env,
                                   const CntLineGeometry& geom = {}) {
    detail::require(geom.height_ratio > 0.5, "CNT height must exceed half a radius");
    const double eps_avg = 0.5 * (env.eps1 + env.eps2);
    return 2.0 * constants::pi * constants::eps0 * eps_avg / std::log(2.0 * geom.height_ratio);
}

/// Wavelength of the wave guided along the antenna at frequency f.
///
/// graphene: TM SPP wavelength from the exact sheet dispersion.
/// CNT: slow wave with k = w sqrt(L_CNT C_eff).
/// copper: lambda0 / sqrt(eps_eff), eps_eff = (eps1 + eps2)/2.
inline double guided_wavelength(double f, const MaterialModel& material, const DielectricEnvironment& env,
                                const CntLineGeometry& geom = {}) {
    detail::require(f > 0.0, "frequency must be positive");
    validate(env);
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, GrapheneParams>) {
                return spp_exact(f, graphene_sigma_intra(f, p), env).lambda_spp;
            } else if constexpr (std::is_same_v<T, CntParams>) {
                const double k = angular(f) * std::sqrt(cnt_rl(p).inductance * cnt_line_capacitance(p, env, geom));
                return 2.0 * constants::pi / k;
            } else {
                validate(p);
                const double eps_eff = 0.5 * (env.eps1 + env.eps2);
                return constants::c0 / f / std::sqrt(eps_eff);
            }
        },
        material);
}

inline constexpr double kResonanceLow = 0.05e12;
inline constexpr double kResonanceHigh = 10e12;

/// Solves length = mode_order * lambda_eff(f) / 2 on (0.05, 10) THz.
inline ResonancePoint resonant_frequency(const AntennaSpec& spec) {
    detail::require(spec.length > 0.0, "antenna length must be positive");
    detail::require(spec.mode_order >= 1, "mode order must be >= 1");
    auto mismatch = [&](double f) {
        return spec.mode_order * guided_wavelength(f, spec.material, spec.env, spec.cnt) / 2.0 - spec.length;
    };

    // lambda_eff falls with f. Walk down from the top of the bracket so a
    // low-frequency stretch without a bound mode cannot hide a root above it.
    constexpr int kScan = 64;
    const double ratio = std::pow(kResonanceHigh / kResonanceLow, 1.0 / kScan);
    double hi = kResonanceHigh;
    double g_hi = mismatch(hi);
    if (g_hi > 0.0) throw NoResonanceError("antenna too short: resonance above 10 THz");
    double lo = hi;
    bool bracketed = false;
    for (int i = 1; i <= kScan; ++i) {
        lo = (i == kScan) ? kResonanceLow : kResonanceHigh / std::pow(ratio, i);
        double g_lo = 0.0;
        try {
            g_lo = mismatch(lo);
        } catch (const ModeNotBoundError&) {
            throw NoResonanceError("no bound guided mode before the resonance condition is met");
        }
        if (g_lo >= 0.0) {
            bracketed = true;
            break;
        }
        hi = lo;
        g_hi = g_lo;
    }
    if (!bracketed) throw NoResonanceError("antenna too long: resonance below 0.05 THz");

    for (int it = 0; it < 200 && (hi - lo) > 1e-10 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mismatch(mid) >= 0.0) lo = mid; else hi = mid;
    }
    const double f_r = 0.5 * (lo + hi);
    const double lambda_eff = guided_wavelength(f_r, spec.material, spec.env, spec.cnt);
    return {f_r, lambda_eff, constants::c0 / f_r / spec.length};
}

struct TuningPoint {
    double vg;    // V
    double mu_c;  // J
    double f_r;   // Hz
};

/// Gate voltage -> mu_c -> graphene SPP -> half-wave resonance, per bias.
inline std::vector<TuningPoint> tuning_curve(double length, const GateStack& stack, std::span<const double> vg_values,
                                             const DielectricEnvironment& env, double tau, double temp,
                                             int mode_order = 1) {
    std::vector<TuningPoint> curve;
    curve.reserve(vg_values.size());
    for (double vg : vg_values) {
        detail::require(vg >= 0.0, "gate voltages must be nonnegative");
        const double mu_c = chemical_potential_from_gate(vg, stack);
        AntennaSpec spec{GrapheneParams{mu_c, tau, temp}, length, env, mode_order, {}};
        curve.push_back({vg, mu_c, resonant_frequency(spec).f_r});
    }
    return curve;
}

// ------------------------------------------------------------ directivity

namespace detail {

/// Far-field intensity of a center-fed sinusoidal-current dipole,
/// U ~ [(cos(a cos t) - cos a) / sin t]^2, a = kL/2. The difference of
/// cosines is written as a product of sines to avoid cancellation.
inline double dipole_intensity(double theta, double half_kl) {
    const double s = std::sin(theta);
    if (s < 1e-12) return 0.0;
    const double c = std::cos(theta);
    const double num = -2.0 * std::sin(0.5 * half_kl * (c + 1.0)) * std::sin(0.5 * half_kl * (c - 1.0));
    const double v = num / s;
    return v * v;
}

}  // namespace detail

/// Peak directivity (dBi) of a thin dipole of length L carrying a
/// sinusoidal current with wavenumber k_eff.
inline double dipole_directivity(double length, double k_eff) {
    detail::require(length > 0.0 && k_eff > 0.0, "length and wavenumber must be positive");
    const double kl = k_eff * length;
    detail::require(kl < 20.0 * constants::pi, "k_eff * L beyond the pattern integration cap (20 pi)");
    const double a = 0.5 * kl;
    auto u = [a](double t) { return detail::dipole_intensity(t, a); };

    // Peak: dense scan, then Brent refinement around the best sample.
    constexpr int kSamples = 4001;
    const double dt = constants::pi / (kSamples - 1);
    int best = 0;
    double u_best = -1.0;
    for (int i = 0; i < kSamples; ++i) {
        const double v = u(i * dt);
        if (v > u_best) { u_best = v; best = i; }
    }
    const double t_lo = std::max(0.0, (best - 1) * dt);
    const double t_hi = std::min(constants::pi, (best + 1) * dt);
    const auto peak = boost::math::tools::brent_find_minima([&](double t) { return -u(t); }, t_lo, t_hi, 52);
    const double u_max = std::max(u_best, -peak.second);

    // Lobe boundaries (nulls of U) grow with kL, so split the interval.
    const int pieces = std::max(2, static_cast<int>(std::ceil(kl / constants::pi)) * 2);
    double power = 0.0;
    double error_sum = 0.0;
    for (int i = 0; i < pieces; ++i) {
        const double lo = constants::pi * i / pieces;
        const double hi = constants::pi * (i + 1) / pieces;
        double err = 0.0;
        double l1 = 0.0;
        power += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            [&](double t) { return u(t) * std::sin(t); }, lo, hi, 15, 1e-12, &err, &l1);
        error_sum += err;
    }
    power *= 2.0 * constants::pi;
    if (!(power > 0.0) || !std::isfinite(power) || error_sum * 2.0 * constants::pi > 1e-4 * power) {
        throw IntegrationError("radiation pattern integration did not reach 1e-4 relative accuracy");
    }
    return 10.0 * std::log10(4.0 * constants::pi * u_max / power);
}

// ----------------------------------------------------- reference dataset

/// Full-wave FEM values reported for the fabricated-scale designs. They are
/// shown beside computed results and never produced by this library.
struct FemReferenceRow {
    std::string_view table;
    std::string_view label;
    double value;
    std::string_view unit;
};

inline constexpr std::array<FemReferenceRow, 21> kFemReference{{
    {"miniaturization", "graphene_length_fraction", 4.4, "lambda0/x"},
    {"miniaturization", "cnt_length_fraction", 3.0, "lambda0/x"},
    {"miniaturization", "copper_length_fraction", 2.0, "lambda0/x"},
    {"directivity", "graphene", 4.3, "dBi"},
    {"directivity", "cnt", 3.0, "dBi"},
    {"directivity", "copper", 2.2, "dBi"},
    {"same_length_71um", "graphene_f_r", 0.81, "THz"},
    {"same_length_71um", "cnt_f_r", 1.42, "THz"},
    {"same_length_71um", "copper_f_r", 1.90, "THz"},
    {"gate_tuning", "f_r_at_7.6V", 2.5, "THz"},
    {"gate_tuning", "f_r_at_13.6V", 3.4, "THz"},
    {"gate_tuning", "f_r_at_21.2V", 4.2, "THz"},
    {"gate_tuning", "f_r_at_30.6V", 5.0, "THz"},
    {"gate_tuning", "directivity_at_7.6V", 2.99, "dBi"},
    {"gate_tuning", "directivity_at_13.6V", 4.12, "dBi"},
    {"gate_tuning", "directivity_at_21.2V", 4.58, "dBi"},
    {"gate_tuning", "directivity_at_30.6V", 5.56, "dBi"},
    {"same_freq_1THz", "graphene_length", 68.0, "um"},
    {"same_freq_1THz", "cnt_length", 99.0, "um"},
    {"same_freq_1THz", "copper_length", 139.0, "um"},
    {"hypersurface", "normal_incidence_efficiency", 0.75, "1"},
}};

}  // namespace thzkit
