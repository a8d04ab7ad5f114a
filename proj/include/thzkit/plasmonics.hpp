#pragma once

// TM surface plasmon polaritons on a conducting sheet between two lossless
// dielectric half-spaces.
//
// Dispersion relation (e^{+jwt}, fields ~ e^{-jkx}):
//
//   eps1/kappa1 + eps2/kappa2 = -sigma/(j w eps0),   kappa_i = sqrt(k^2 - eps_i k0^2)
//
// with re(kappa_i) > 0 so the fields decay away from the sheet. For strong
// confinement kappa_i ~ k and the relation collapses to the quasi-static
// closed form k = -j w eps0 (eps1 + eps2) / sigma.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "thzkit/errors.hpp"
#include "thzkit/materials.hpp"
#include "thzkit/quantities.hpp"

namespace thzkit {

struct DielectricEnvironment {
    double eps1 = 1.0;  // above the sheet
    double eps2 = 1.0;  // below the sheet
};

inline void validate(const DielectricEnvironment& env) {
    detail::require(env.eps1 >= 1.0 && env.eps2 >= 1.0,
                    "relative permittivities must be real and >= 1");
}

struct SppMode {
    Complex k_spp;       // rad/m
    double f;            // Hz
    double lambda_spp;   // m
    double confinement;  // lambda0 / lambda_spp
    double prop_length;  // m, 1/(2|im k|)
};

/// Builds the mode record and enforces the bound-mode and sign invariants.
inline SppMode make_mode(double f, Complex k, const DielectricEnvironment& env) {
    const double k0 = free_space_wavenumber(f);
    const double light_line = k0 * std::sqrt(std::max(env.eps1, env.eps2));
    if (!(k.real() > light_line)) {
        throw ModeNotBoundError("SPP wavenumber lies on or below the light line");
    }
    if (k.imag() > 0.0) {
        // Round-off on a lossless sheet can leave a tiny positive part.
        if (k.imag() > 1e-12 * k.real()) throw ModeNotBoundError("SPP mode grows along propagation");
        k = {k.real(), 0.0};
    }
    const double im = std::abs(k.imag());
    return SppMode{
        k,
        f,
        2.0 * constants::pi / k.real(),
        k.real() / k0,
        im > 0.0 ? 1.0 / (2.0 * im) : std::numeric_limits<double>::infinity(),
    };
}

namespace detail {

inline void check_spp_inputs(double f, Complex sigma, const DielectricEnvironment& env) {
    require(f > 0.0, "frequency must be positive");
    require(sigma.real() >= 0.0, "sheet must be passive (re(sigma) >= 0)");
    validate(env);
    if (std::abs(sigma) < 1e-12) throw SingularityError("sheet conductivity vanishes");
}

}  // namespace detail

inline Complex spp_quasistatic_wavenumber(double f, Complex sigma, const DielectricEnvironment& env) {
    return -kJ * angular(f) * constants::eps0 * (env.eps1 + env.eps2) / sigma;
}

inline SppMode spp_quasistatic(double f, Complex sigma, const DielectricEnvironment& env) {
    detail::check_spp_inputs(f, sigma, env);
    return make_mode(f, spp_quasistatic_wavenumber(f, sigma, env), env);
}

/// eps1/kappa1 + eps2/kappa2 + sigma/(j w eps0).
inline Complex spp_dispersion_residual(Complex k, double f, Complex sigma, const DielectricEnvironment& env) {
    const double k0 = free_space_wavenumber(f);
    const Complex kappa1 = std::sqrt(k * k - env.eps1 * k0 * k0);
    const Complex kappa2 = std::sqrt(k * k - env.eps2 * k0 * k0);
    return env.eps1 / kappa1 + env.eps2 / kappa2 + sigma / (kJ * angular(f) * constants::eps0);
}

struct SppSolverOptions {
    int max_iterations = 200;
    double tolerance = 1e-9;  // relative to |sigma/(j w eps0)|
    double step_clamp = 0.5;  // max |dk| as a fraction of |k|
};

/// Full retarded root by damped Newton iteration with a central-difference
/// derivative, seeded with the quasi-static solution.
///
/// The unknown is the decay constant q = kappa in the denser medium, with
/// k^2 = q^2 + eps_max k0^2. In this variable the light-line branch point
/// (kappa -> 0) becomes a regular point, so weakly bound modes near the
/// light line converge as reliably as strongly confined ones.
inline SppMode spp_exact(double f, Complex sigma, const DielectricEnvironment& env,
                         const SppSolverOptions& opts = {}) {
    detail::check_spp_inputs(f, sigma, env);
    const double k0 = free_space_wavenumber(f);
    const Complex s = sigma / (kJ * angular(f) * constants::eps0);
    const double scale = std::abs(s);
    const double eps_hi = std::max(env.eps1, env.eps2);
    const double eps_lo = std::min(env.eps1, env.eps2);
    const double gap = (eps_hi - eps_lo) * k0 * k0;
    auto residual = [&](Complex q) { return eps_hi / q + eps_lo / std::sqrt(q * q + gap) + s; };

    // Quasi-static: kappa_1 = kappa_2 = k = -(eps1 + eps2)/s.
    Complex q = -(env.eps1 + env.eps2) / s;
    if (!(q.real() > 0.0)) throw ModeNotBoundError("sheet does not support a bound TM mode (needs im(sigma) < 0)");

    Complex r = residual(q);
    double rel = std::abs(r) / scale;
    int wall_hits = 0;
    for (int it = 0; it < opts.max_iterations; ++it) {
        const double h = 1e-7 * std::abs(q);
        const Complex dr = (residual(q + h) - residual(q - h)) / (2.0 * h);
        if (dr == Complex{} || !std::isfinite(std::abs(dr))) break;
        Complex step = r / dr;
        const double limit = opts.step_clamp * std::abs(q);
        if (std::abs(step) > limit) step *= limit / std::abs(step);
        q -= step;
        // Stay on the proper sheet.
        if (q.real() <= 0.0) {
            q = {1e-3 * std::abs(q), q.imag()};
            ++wall_hits;
        }
        r = residual(q);
        rel = std::abs(r) / scale;
        // Polish past the tolerance until the update stalls at round-off.
        if (rel < opts.tolerance && std::abs(step) <= 1e-13 * std::abs(q)) break;
    }
    if (!(rel < opts.tolerance)) {
        // Repeatedly pushed onto re(kappa) = 0: the root has left the proper sheet.
        if (wall_hits >= 3) throw ModeNotBoundError("no proper bound SPP root (overdamped sheet)");
        throw ConvergenceError("SPP dispersion solver did not converge", rel);
    }
    Complex k = std::sqrt(q * q + eps_hi * k0 * k0);
    if (k.real() < 0.0) k = -k;
    return make_mode(f, k, env);
}

/// One exact mode per frequency, in sweep order.
inline std::vector<SppMode> confinement_curve(std::span<const double> frequencies, const GrapheneParams& p,
                                              const DielectricEnvironment& env) {
    std::vector<SppMode> modes;
    modes.reserve(frequencies.size());
    for (double f : frequencies) {
        detail::require(f > 0.0 && f <= 10e12, "confinement sweep must lie within (0, 10 THz]");
        modes.push_back(spp_exact(f, graphene_sigma_intra(f, p), env));
    }
    return modes;
}

}  // namespace thzkit
