#pragma once

// Independent reference implementations used only by the tests. They share
// no code with the library beyond std:: and restate each model from its
// defining formula with a different numerical method.

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

namespace oracle {

using C = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double e = 1.602176634e-19;
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double kB = 1.380649e-23;
inline constexpr double eps0 = 8.8541878128e-12;
inline constexpr double mu0 = 1.25663706212e-6;
inline constexpr double c0 = 299792458.0;

inline double omega(double f) { return 2.0 * pi * f; }

/// Intraband sheet conductivity, straight from the Kubo closed form.
inline C graphene_sigma(double f, double mu_c, double tau, double temp) {
    const double kt = kB * temp;
    const double bracket = mu_c / kt + 2.0 * std::log(std::exp(-mu_c / kt) + 1.0);
    return -C(0, 1) * e * e * kt / (pi * hbar * hbar * C(omega(f), -1.0 / tau)) * bracket;
}

inline C copper_sigma(double f, double sigma0, double tau) { return sigma0 / C(1.0, omega(f) * tau); }

inline double copper_skin_depth(double f, double sigma0, double tau) {
    return std::sqrt(2.0 / (omega(f) * mu0 * copper_sigma(f, sigma0, tau).real()));
}

/// TM sheet dispersion residual with explicitly decaying kappas.
inline C spp_residual(C k, double f, C sigma, double eps1, double eps2) {
    const double k0 = omega(f) / c0;
    auto kappa = [&](double eps) {
        C q = std::sqrt(k * k - eps * k0 * k0);
        return q.real() < 0.0 ? -q : q;
    };
    return eps1 / kappa(eps1) + eps2 / kappa(eps2) - C(0, 1) * sigma / (omega(f) * eps0);
}

/// Brute-force root: minimize |residual| on a shrinking complex grid.
/// The first window spans [light line, 4 k_qs] x [-2|k_qs|, 0].
inline C spp_root_scan(double f, C sigma, double eps1, double eps2) {
    const double k0 = omega(f) / c0;
    const C k_qs = C(0, -1) * omega(f) * eps0 * (eps1 + eps2) / sigma;
    const double light = k0 * std::sqrt(std::max(eps1, eps2));
    double re_lo = light * (1.0 + 1e-9);
    double re_hi = std::max(4.0 * std::abs(k_qs), 2.0 * light);
    double im_lo = -2.0 * std::abs(k_qs);
    double im_hi = 0.0;
    constexpr int n = 80;
    C best{};
    for (int round = 0; round < 60; ++round) {
        double best_val = INFINITY;
        const double dr = (re_hi - re_lo) / n;
        const double di = (im_hi - im_lo) / n;
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= n; ++j) {
                const C k(re_lo + i * dr, im_lo + j * di);
                const double v = std::abs(spp_residual(k, f, sigma, eps1, eps2));
                if (v < best_val) { best_val = v; best = k; }
            }
        }
        const double half_r = 3.0 * dr;
        const double half_i = 3.0 * di;
        re_lo = std::max(light * (1.0 + 1e-12), best.real() - half_r);
        re_hi = best.real() + half_r;
        im_lo = best.imag() - half_i;
        im_hi = std::min(0.0, best.imag() + half_i);
        if (half_r < 1e-14 * std::abs(best) && half_i < 1e-14 * std::abs(best)) break;
    }
    return best;
}

/// Reflection from a shunt sheet admittance over a shorted line, by ABCD
/// cascade: [1 0; Y 1] * [cos, jZ sin; j sin/Z, cos], Z_in = B/D at a short.
inline C abcd_reflection(double f, C y_sheet, double eps_r, double thickness, double theta, bool te) {
    const double k0 = omega(f) / c0;
    const double eta0 = std::sqrt(mu0 / eps0);
    const double s = std::sin(theta);
    const double kz = k0 * std::sqrt(eps_r - s * s);
    const double zd = te ? eta0 * k0 / kz : eta0 * kz / (eps_r * k0);
    const double z_air = te ? eta0 / std::cos(theta) : eta0 * std::cos(theta);
    const double ph = kz * thickness;
    const C line[2][2] = {{std::cos(ph), C(0, zd * std::sin(ph))}, {C(0, std::sin(ph) / zd), std::cos(ph)}};
    const C shunt[2][2] = {{1.0, 0.0}, {y_sheet, 1.0}};
    C m[2][2];
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m[r][c] = shunt[r][0] * line[0][c] + shunt[r][1] * line[1][c];
    const C z_in = m[0][1] / m[1][1];
    return (z_in - z_air) / (z_in + z_air);
}

/// Sinusoidal-current dipole directivity (linear), by composite Simpson
/// on the textbook pattern and a dense peak search.
inline double dipole_directivity(double kl, int panels = 200000) {
    const double a = 0.5 * kl;
    auto u = [a](double t) {
        const double s = std::sin(t);
        if (s == 0.0) return 0.0;
        const double v = (std::cos(a * std::cos(t)) - std::cos(a)) / s;
        return v * v;
    };
    const double h = pi / panels;
    double sum = 0.0;
    double peak = 0.0;
    for (int i = 0; i <= panels; ++i) {
        const double t = i * h;
        const double w = (i == 0 || i == panels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        const double v = u(t);
        sum += w * v * std::sin(t);
        peak = std::max(peak, v);
    }
    const double power = 2.0 * pi * sum * h / 3.0;
    return 4.0 * pi * peak / power;
}

inline double to_dbi(double d) { return 10.0 * std::log10(d); }

}  // namespace oracle
