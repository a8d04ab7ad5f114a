// Acceptance suite: one PASS/FAIL line per criterion.
//
//   thzkit_acceptance                 run all criteria
//   thzkit_acceptance --criterion N   run criterion N only
//
// Exit status is 0 only if every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thzkit/cli.hpp"
#include "thzkit/thzkit.hpp"

using namespace thzkit;

namespace {

/// Collects sub-check outcomes for one criterion.
struct Verdict {
    bool ok = true;
    std::vector<std::string> notes;

    void check(bool pass, const std::string& what) {
        if (!pass) ok = false;
        notes.push_back((pass ? "" : "!") + what);
    }
};

std::string fmt(const char* f, double a) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double rel_err(double value, double ref) { return std::abs(value / ref - 1.0); }

GrapheneParams graphene(double mu_ev, double tau = 1e-12) { return {mu_ev * constants::e, tau, 300.0}; }

// 1 ---------------------------------------------------------------- gate chain
Verdict gate_chain() {
    Verdict v;
    const double vg[] = {7.6, 13.6, 21.2, 30.6};
    const double n_pub[] = {6.7, 12.0, 18.8, 27.0};      // 1e12 cm^-2, tol 1%
    const double mu_pub[] = {0.3, 0.4, 0.5, 0.6};        // eV, tol 2%
    const double e_pub[] = {3.06, 5.44, 8.5, 12.2};      // MV/cm, tol 5%
    const auto stack = table2_stack();
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < 4; ++i) {
        const auto op = operating_point(vg[i], stack);
        const double n = op.n * 1e-16;
        const double mu = joule_to_ev(op.mu_c);
        const double e = op.e_field * 1e-8;
        v.check(rel_err(n, n_pub[i]) <= 0.01, fmt("n(%.1fV)=%.4g", vg[i], n));
        v.check(rel_err(mu, mu_pub[i]) <= 0.02, fmt("mu=%.4g", mu));
        v.check(rel_err(e, e_pub[i]) <= 0.05, fmt("E=%.4g", e));
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    v.check(ms < 100.0, fmt("%.3gms", ms));
    return v;
}

// 2 ------------------------------------------------------------ spreading delta
Verdict spreading_delta() {
    Verdict v;
    for (double d : {1.0, 10.0, 100.0}) {
        const double delta = spreading_loss_db(1e12, d) - spreading_loss_db(1e9, d);
        v.check(std::abs(delta - 60.0) <= 1e-9, fmt("d=%gm delta=%.12f dB", d, delta));
    }
    return v;
}

// 3 ------------------------------------------------------------ copper physics
Verdict copper_physics() {
    Verdict v;
    const CopperParams cu;
    const double delta = copper_skin_depth(1e12, cu);
    const double ref = oracle::copper_skin_depth(1e12, cu.sigma0, cu.tau);
    v.check(rel_err(delta, ref) <= 0.02 && rel_err(delta, 66e-9) <= 0.02, fmt("delta(1THz)=%.4g nm", delta * 1e9));

    // Monotonicity on a 400-point log grid over 0.1-10 THz.
    double prev = INFINITY;
    double first_rise = 0.0;
    double f_min = 0.0;
    double d_min = INFINITY;
    for (int i = 0; i < 400; ++i) {
        const double f = 0.1e12 * std::pow(100.0, i / 399.0);
        const double d = copper_skin_depth(f, cu);
        if (d < d_min) { d_min = d; f_min = f; }
        if (!(d < prev) && first_rise == 0.0) first_rise = f;
        prev = d;
    }
    if (first_rise == 0.0) {
        v.check(true, "delta strictly decreasing over 0.1-10 THz");
    } else {
        v.check(false, fmt("delta not monotone: minimum %.4g nm at %.3g THz, rises to %.4g nm at 10 THz", d_min * 1e9,
                           f_min / 1e12, copper_skin_depth(10e12, cu) * 1e9));
    }
    return v;
}

// 4 ------------------------------------------------------------- CNT constants
Verdict cnt_constants() {
    Verdict v;
    const CntParams p;
    const double l_nh_per_um = cnt_rl(p).inductance * 1e9 * 1e-6;
    v.check(rel_err(l_nh_per_um, 4.03) <= 0.005, fmt("L=%.5g nH/um", l_nh_per_um));
    double worst = 0.0;
    double worst_radius = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double f = 0.1e12 * std::pow(100.0, i / 199.0);
        const auto line = cnt_rl(p);
        const Complex rl{line.resistance, angular(f) * line.inductance};
        const Complex z = cnt_impedance_per_length(f, p).z;
        worst = std::max(worst, std::abs(z - rl) / std::abs(rl));
        for (double r : {0.4e-9, 1e-9, 5e-9, 20e-9}) {
            CntParams q = p;
            q.radius = r;
            worst_radius = std::max(worst_radius, std::abs(cnt_impedance_per_length(f, q).z - z) / std::abs(z));
        }
    }
    v.check(worst <= 1e-12, fmt("Z vs R+jwL max rel %.2g", worst));
    v.check(worst_radius <= 1e-12, fmt("radius spread %.2g", worst_radius));
    return v;
}

// 5 ---------------------------------------------------- SPP oracle equivalence
Verdict spp_oracle() {
    Verdict v;
    const double mus[] = {0.1, 0.2, 0.3, 0.5, 0.8};
    const double freqs[] = {0.5e12, 1e12, 2e12, 4e12, 8e12};
    const double eps2s[] = {1.0, 2.1, 3.9};
    double worst_oracle = 0.0;
    double worst_qs = 0.0;
    int points = 0;
    int confined = 0;
    int invariant_failures = 0;
    for (double mu : mus) {
        for (double f : freqs) {
            for (double eps2 : eps2s) {
                ++points;
                const DielectricEnvironment env{1.0, eps2};
                const auto sigma = graphene_sigma_intra(f, graphene(mu));
                const auto ex = spp_exact(f, sigma, env);
                const auto ref = oracle::spp_root_scan(f, sigma, env.eps1, env.eps2);
                worst_oracle = std::max({worst_oracle, rel_err(ex.k_spp.real(), ref.real()),
                                         rel_err(ex.k_spp.imag(), ref.imag())});
                const double k0 = free_space_wavenumber(f);
                const bool bound = ex.k_spp.real() > k0 * std::sqrt(std::max(env.eps1, env.eps2)) &&
                                   ex.k_spp.imag() <= 0.0 && ex.prop_length > 0.0 &&
                                   std::sqrt(ex.k_spp * ex.k_spp - k0 * k0 * env.eps1).real() > 0.0 &&
                                   std::sqrt(ex.k_spp * ex.k_spp - k0 * k0 * env.eps2).real() > 0.0;
                if (!bound) ++invariant_failures;
                if (ex.confinement > 10.0) {
                    ++confined;
                    const auto qs = spp_quasistatic(f, sigma, env);
                    worst_qs = std::max({worst_qs, rel_err(qs.k_spp.real(), ex.k_spp.real()),
                                         rel_err(qs.k_spp.imag(), ex.k_spp.imag())});
                }
            }
        }
    }
    v.check(points == 75, fmt("%g grid points", points));
    v.check(worst_oracle <= 1e-3, fmt("Newton vs scan max rel %.2g", worst_oracle));
    v.check(confined > 0 && worst_qs <= 0.05, fmt("qs vs exact max rel %.3g over %g confined points", worst_qs, confined));
    v.check(invariant_failures == 0, fmt("%g invariant failures", invariant_failures));
    return v;
}

// 6 ---------------------------------------------------- miniaturization orders
Verdict miniaturization() {
    Verdict v;
    const DielectricEnvironment env{1.0, 3.9};
    const MaterialModel models[] = {GrapheneParams{}, CntParams{}, CopperParams{}};
    const char* names[] = {"graphene", "cnt", "copper"};

    // Resonant half-wave length at 1 THz.
    double len[3];
    for (int i = 0; i < 3; ++i) len[i] = guided_wavelength(1e12, models[i], env) / 2.0;
    v.check(len[0] < len[1] && len[1] < len[2],
            fmt("L(1THz) graphene %.4g < cnt %.4g < copper %.4g um", len[0] * 1e6, len[1] * 1e6, len[2] * 1e6));

    // Resonant frequency at L = 71 um.
    double fr[3];
    bool ok[3];
    std::string fr_text = "f_r(71um)";
    for (int i = 0; i < 3; ++i) {
        try {
            fr[i] = resonant_frequency(AntennaSpec{models[i], 71e-6, env, 1, {}}).f_r;
            ok[i] = true;
            fr_text += std::string(" ") + names[i] + fmt("=%.4g THz", fr[i] / 1e12);
        } catch (const NoResonanceError& e) {
            ok[i] = false;
            fr_text += std::string(" ") + names[i] + "=none(" + e.what() + ")";
        }
    }
    v.check(ok[0] && ok[1] && ok[2] && fr[0] < fr[1] && fr[1] < fr[2], fr_text);

    const double f_g = resonant_frequency(AntennaSpec{GrapheneParams{}, 68e-6, env, 1, {}}).f_r;
    v.check(std::abs(f_g / 1e12 - 1.0) <= 0.25, fmt("graphene 68um f_r=%.4g THz (+-25%%)", f_g / 1e12));
    const double f_c = resonant_frequency(AntennaSpec{CopperParams{}, 139e-6, env, 1, {}}).f_r;
    v.check(std::abs(f_c / 1e12 - 1.0) <= 0.15, fmt("copper 139um f_r=%.4g THz (+-15%%)", f_c / 1e12));
    return v;
}

// 7 ---------------------------------------------------------- tuning monotone
Verdict tuning() {
    Verdict v;
    std::vector<double> vg;
    for (double x = 7.6; x <= 30.6 + 1e-9; x += 0.25) vg.push_back(x);
    vg.push_back(30.6);
    for (double length : {10e-6, 20e-6, 68e-6}) {
        const auto curve = tuning_curve(length, table2_stack(), vg, {1.0, 3.9}, 1e-12, 300.0);
        bool mono = true;
        for (std::size_t i = 1; i < curve.size(); ++i) {
            if (curve[i].vg > curve[i - 1].vg && !(curve[i].f_r > curve[i - 1].f_r)) mono = false;
        }
        v.check(mono, fmt("L=%gum f_r %.4g -> %.4g THz", length * 1e6, curve.front().f_r / 1e12,
                          curve.back().f_r / 1e12));
    }
    return v;
}

// 8 --------------------------------------------------------------- directivity
Verdict directivity() {
    Verdict v;
    const double half = dipole_directivity(1.0, constants::pi);
    const double half_ref = oracle::to_dbi(oracle::dipole_directivity(oracle::pi));
    v.check(std::abs(half - 2.15) <= 0.02 && std::abs(half_ref - 2.15) <= 0.02,
            fmt("half-wave %.5f dBi (oracle %.5f)", half, half_ref));
    const double hertz = dipole_directivity(1.0, 1e-2);
    const double hertz_ref = oracle::to_dbi(oracle::dipole_directivity(1e-2));
    v.check(std::abs(hertz - 1.76) <= 0.05 && std::abs(hertz_ref - 1.76) <= 0.05,
            fmt("Hertzian %.5f dBi (oracle %.5f)", hertz, hertz_ref));
    return v;
}

// 9 ------------------------------------------------------------- hypersurface
Verdict hypersurface() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double max_eff = 0.0;
    double worst_abcd = 0.0;
    double worst_lossless = 0.0;
    for (int i = 0; i < 10000; ++i) {
        HsfCell cell;
        cell.slab_thickness = 1e-6 + u(rng) * 100e-6;
        cell.slab_rel_permittivity = 1.0 + u(rng) * 11.0;
        cell.fill_factor = 0.01 + u(rng) * 0.99;
        cell.graphene = {u(rng) * constants::e, std::pow(10.0, -14.0 + 3.0 * u(rng)), 4.0 + 500.0 * u(rng)};
        const double f = 0.1e12 + u(rng) * 9.9e12;
        const double theta = u(rng) * 1.45;
        const bool te = u(rng) < 0.5;
        const auto pol = te ? Polarization::TE : Polarization::TM;

        const auto s = reflection(f, cell, theta, pol);
        max_eff = std::max(max_eff, s.efficiency);
        const Complex y = cell.fill_factor *
                          oracle::graphene_sigma(f, cell.graphene.mu_c, cell.graphene.tau, cell.graphene.temp);
        const auto ref = oracle::abcd_reflection(f, y, cell.slab_rel_permittivity, cell.slab_thickness, theta, te);
        worst_abcd = std::max(worst_abcd, std::abs(s.gamma - ref));

        cell.graphene.tau = 1e300;
        worst_lossless = std::max(worst_lossless, std::abs(std::abs(reflection(f, cell, theta, pol).gamma) - 1.0));
    }
    v.check(max_eff <= 1.0, fmt("max |G|^2 = %.15f over 1e4 draws", max_eff));
    v.check(worst_lossless <= 1e-9, fmt("lossless ||G|-1| max %.2g", worst_lossless));
    v.check(worst_abcd <= 1e-9, fmt("ABCD max |dG| %.2g", worst_abcd));

    const auto mus = parse_sweep("0.1:1.0:0.02eV", Dimension::energy, Unit::eV).samples();
    const double cov = phase_coverage(1e12, fig4_cell(), mus, 0.0, Polarization::TM);
    v.check(cov > 270.0, fmt("fig4 coverage %.2f deg", cov));
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.check(s < 10.0, fmt("%.2gs", s));
    return v;
}

// 10 ------------------------------------------------------------ determinism
Verdict determinism() {
    Verdict v;
    const std::vector<std::vector<std::string>> commands{
        {"thzkit", "spp", "--mu-c", "0.3eV", "--tau", "1ps", "--eps1", "1", "--eps2", "4", "--f-sweep",
         "0.5:5:0.1THz", "--out", "csv"},
        {"thzkit", "tune", "--stack", "table2", "--vg-sweep", "0:35:0.5", "--out", "csv"},
        {"thzkit", "hsf", "--preset", "fig4", "--f-sweep", "0.5:1.5:0.005THz", "--theta", "0deg", "--pol", "TM",
         "--out", "csv"},
        {"thzkit", "antenna", "tune", "--length", "20um", "--stack", "table2", "--vg", "7.6,13.6,21.2,30.6"},
        {"thzkit", "link", "--f", "1THz", "--d-sweep", "1:100:1m"},
    };
    for (const auto& base : commands) {
        std::string first;
        bool same = true;
        for (const char* workers : {"1", "1", "4", "7"}) {
            auto args = base;
            args.insert(args.begin() + 1, {"--workers", workers});
            std::ostringstream out, err;
            if (cli::run(args, out, err) != 0) same = false;
            if (first.empty()) first = out.str();
            else if (out.str() != first) same = false;
        }
        v.check(same && !first.empty(), base[1] + (same ? " identical" : " differs"));
    }
    return v;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "gate chain reproduces reference density, potential and field values", gate_chain},
        {2, "spreading loss grows by 60 dB from 1 GHz to 1 THz", spreading_delta},
        {3, "copper skin depth value and monotonicity", copper_physics},
        {4, "CNT kinetic inductance and impedance identity", cnt_constants},
        {5, "SPP Newton root agrees with brute-force scan", spp_oracle},
        {6, "miniaturization orderings and resonance anchors", miniaturization},
        {7, "resonance increases with gate voltage", tuning},
        {8, "dipole directivity classical limits", directivity},
        {9, "hypersurface passivity, unitarity, oracle and coverage", hypersurface},
        {10, "CLI output is byte-identical across runs and workers", determinism},
    };

    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::fprintf(stderr, "no criterion %d\n", only);
        return 2;
    }

    int failures = 0;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.check(false, std::string("exception: ") + e.what());
        }
        std::string detail;
        for (const auto& n : v.notes) detail += (detail.empty() ? "" : "; ") + n;
        std::printf("%s [%d] %s :: %s\n", v.ok ? "PASS" : "FAIL", c.id, c.title, detail.c_str());
        if (!v.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
