#pragma once

// Intraband conductivity and impedance models of graphene, armchair CNTs
// and copper in the THz band.

#include <cmath>
#include <optional>
#include <type_traits>
#include <utility>
#include <variant>

#include "thzkit/errors.hpp"
#include "thzkit/quantities.hpp"

namespace thzkit {

struct GrapheneParams {
    double mu_c = 0.3 * constants::e;  // J
    double tau = 1e-12;                // s
    double temp = 300.0;               // K
};

struct CntParams {
    double radius = 2.712e-9;  // m, (20,20) armchair tube
    double vf = 8.0e5;         // m/s
    double tau = 3e-12;        // s
    bool armchair = true;
};

struct CopperParams {
    double sigma0 = 5.96e7;  // S/m
    double tau = 2.5e-14;    // s
    std::optional<double> n;  // m^-3, when the DC value is derived from it
    double m_e = constants::m_e;

    /// sigma0 = n e^2 tau / m.
    static CopperParams from_electron_density(double n, double tau, double mass = constants::m_e) {
        CopperParams p;
        p.sigma0 = n * constants::e * constants::e * tau / mass;
        p.tau = tau;
        p.n = n;
        p.m_e = mass;
        return p;
    }
};

using MaterialModel = std::variant<GrapheneParams, CntParams, CopperParams>;

enum class ImpedanceKind { sheet, per_length, wave };

struct SurfaceImpedance {
    Complex z;  // ohm/sq, ohm/m or ohm depending on kind
    ImpedanceKind kind;
};

inline void validate(const GrapheneParams& p) {
    detail::require(p.tau > 0.0, "graphene relaxation time must be positive");
    detail::require(p.temp > 0.0, "graphene temperature must be positive");
    detail::require(p.mu_c >= 0.0, "graphene chemical potential must be nonnegative");
}

inline void validate(const CntParams& p) {
    detail::require(p.radius > 0.0, "CNT radius must be positive");
    detail::require(p.vf > 0.0, "CNT Fermi velocity must be positive");
    detail::require(p.tau > 0.0, "CNT relaxation time must be positive");
    detail::require(p.armchair, "CNT conductivity model is valid for metallic armchair tubes only");
}

inline void validate(const CopperParams& p) {
    detail::require(p.sigma0 > 0.0, "copper DC conductivity must be positive");
    detail::require(p.tau > 0.0, "copper relaxation time must be positive");
    if (p.n) {
        const double drude = *p.n * constants::e * constants::e * p.tau / p.m_e;
        detail::require(std::abs(drude - p.sigma0) <= 1e-6 * p.sigma0,
                        "copper sigma0 inconsistent with n e^2 tau / m");
    }
}

inline double angular(double f) { return 2.0 * constants::pi * f; }

inline double free_space_wavenumber(double f) { return angular(f) / constants::c0; }

// ---------------------------------------------------------------- graphene

/// Kubo intraband sheet conductivity (S).
///
///   sigma = -j e^2 kB T / (pi hbar^2 (w - j/tau))
///           * [mu_c/(kB T) + 2 ln(exp(-mu_c/(kB T)) + 1)]
inline Complex graphene_sigma_intra(double f, const GrapheneParams& p) {
    detail::require(f > 0.0, "frequency must be positive");
    validate(p);
    using namespace constants;
    const double kt = kB * p.temp;
    const double x = p.mu_c / kt;
    const double bracket = x + 2.0 * std::log1p(std::exp(-x));
    const Complex denom = pi * hbar * hbar * Complex(angular(f), -1.0 / p.tau);
    return -kJ * (e * e * kt * bracket) / denom;
}

/// Z_s = 1/sigma_s for a conducting sheet.
inline SurfaceImpedance sheet_impedance(Complex sigma) {
    if (std::abs(sigma) < 1e-12) throw SingularityError("sheet conductivity vanishes");
    return {1.0 / sigma, ImpedanceKind::sheet};
}

inline SurfaceImpedance graphene_surface_impedance(double f, const GrapheneParams& p) {
    return sheet_impedance(graphene_sigma_intra(f, p));
}

/// Relaxation time implied by a carrier mobility, tau = mobility mu_c / (e vf^2).
inline double tau_from_mobility(double mobility, double mu_c, double vf) {
    detail::require(mobility > 0.0 && mu_c > 0.0 && vf > 0.0,
                    "mobility, chemical potential and Fermi velocity must be positive");
    return mobility * mu_c / (constants::e * vf * vf);
}

// --------------------------------------------------------------------- CNT

inline Complex cnt_sigma_intra(double f, const CntParams& p) {
    detail::require(f > 0.0, "frequency must be positive");
    validate(p);
    using namespace constants;
    const Complex denom = pi * pi * hbar * p.radius * Complex(angular(f), -1.0 / p.tau);
    return -kJ * (2.0 * e * e * p.vf) / denom;
}

struct CntLine {
    double resistance;  // ohm/m
    double inductance;  // H/m, kinetic
};

/// Scattering resistance and kinetic inductance per unit length.
inline CntLine cnt_rl(const CntParams& p) {
    validate(p);
    using namespace constants;
    const double inductance = pi * hbar / (4.0 * e * e * p.vf);
    return {inductance / p.tau, inductance};
}

/// 1/(2 pi r sigma_CNT). Analytically r cancels and this equals R + jwL of
/// cnt_rl; it is evaluated through the conductivity so the two stay
/// independent routes.
inline SurfaceImpedance cnt_impedance_per_length(double f, const CntParams& p) {
    const Complex sigma = cnt_sigma_intra(f, p);
    return {1.0 / (2.0 * constants::pi * p.radius * sigma), ImpedanceKind::per_length};
}

// ------------------------------------------------------------------ copper

inline Complex copper_drude_sigma(double f, const CopperParams& p) {
    detail::require(f >= 0.0, "frequency must be nonnegative");
    validate(p);
    if (f == 0.0) return {p.sigma0, 0.0};
    return p.sigma0 / Complex(1.0, angular(f) * p.tau);
}

/// sqrt(jw mu0 / (sigma_D + jw eps0)), principal branch. The real part is
/// R_cu and the imaginary part the total reactance w(L_i + L_k).
inline SurfaceImpedance copper_wave_impedance(double f, const CopperParams& p) {
    detail::require(f > 0.0, "frequency must be positive");
    const double w = angular(f);
    const Complex sigma = copper_drude_sigma(f, p);
    const Complex z = std::sqrt(kJ * w * constants::mu0 / (sigma + kJ * w * constants::eps0));
    return {z, ImpedanceKind::wave};
}

inline double copper_skin_depth(double f, const CopperParams& p) {
    detail::require(f > 0.0, "frequency must be positive");
    const double re_sigma = copper_drude_sigma(f, p).real();
    if (!(re_sigma > 0.0)) throw DomainError("non-positive copper conductivity");
    return std::sqrt(2.0 / (angular(f) * constants::mu0 * re_sigma));
}

// ------------------------------------------------------------ dispatching

inline Complex conductivity(double f, const MaterialModel& m) {
    return std::visit(
        [f](const auto& p) -> Complex {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, GrapheneParams>) return graphene_sigma_intra(f, p);
            else if constexpr (std::is_same_v<T, CntParams>) return cnt_sigma_intra(f, p);
            else return copper_drude_sigma(f, p);
        },
        m);
}

inline SurfaceImpedance impedance(double f, const MaterialModel& m) {
    return std::visit(
        [f](const auto& p) -> SurfaceImpedance {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, GrapheneParams>) return graphene_surface_impedance(f, p);
            else if constexpr (std::is_same_v<T, CntParams>) return cnt_impedance_per_length(f, p);
            else return copper_wave_impedance(f, p);
        },
        m);
}

inline const char* material_name(const MaterialModel& m) {
    switch (m.index()) {
        case 0: return "graphene";
        case 1: return "cnt";
        default: return "copper";
    }
}

}  // namespace thzkit
