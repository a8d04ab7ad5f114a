#pragma once

// thzkit command-line front end.
//
//   thzkit material sigma|impedance|skin-depth
//   thzkit spp
//   thzkit tune
//   thzkit antenna resonance|tune|directivity|reference
//   thzkit link
//   thzkit hsf [coverage]
//
// Exit codes: 0 success, 1 domain/numerical error, 2 usage error.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thzkit/antenna.hpp"
#include "thzkit/config.hpp"
#include "thzkit/errors.hpp"
#include "thzkit/gating.hpp"
#include "thzkit/hypersurface.hpp"
#include "thzkit/linkbudget.hpp"
#include "thzkit/materials.hpp"
#include "thzkit/output.hpp"
#include "thzkit/parallel.hpp"
#include "thzkit/plasmonics.hpp"
#include "thzkit/quantities.hpp"
#include "thzkit/sweep.hpp"

namespace thzkit::cli {

namespace detail {

using thzkit::detail::trim;

/// Raw flag text; parsed into SI only after the command line is accepted.
using Text = std::optional<std::string>;

struct Common {
    std::string config;
    std::string out;
    unsigned workers = 0;
};

inline double si(const std::string& text, Dimension dim, Unit default_unit, const char* flag) {
    try {
        return parse_si(text, dim, default_unit);
    } catch (const UnitError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    } catch (const ParseError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

inline double si_or(const Text& t, double fallback, Dimension dim, Unit default_unit, const char* flag) {
    return t ? si(*t, dim, default_unit, flag) : fallback;
}

inline double plain(const std::string& text, const char* flag) {
    return si(text, Dimension::dimensionless, Unit::none, flag);
}

inline std::vector<double> list(const std::string& text, Dimension dim, Unit default_unit, const char* flag) {
    std::vector<double> values;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = trim(rest.substr(0, comma));
        if (item.empty()) throw UsageError(std::string(flag) + ": empty list item");
        values.push_back(si(std::string(item), dim, default_unit, flag));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return values;
}

/// Exactly one of a single value or a sweep must be given.
inline std::vector<double> points(const Text& single, const Text& sweep, Dimension dim, Unit default_unit,
                                  const char* single_flag, const char* sweep_flag) {
    if (single && sweep) throw UsageError(std::string(single_flag) + " and " + sweep_flag + " are exclusive");
    if (sweep) return parse_sweep(*sweep, dim, default_unit).samples();
    if (single) return list(*single, dim, default_unit, single_flag);
    throw UsageError(std::string("one of ") + single_flag + " or " + sweep_flag + " is required");
}

inline OutputFormat format_of(const std::string& text, OutputFormat fallback) {
    if (text.empty()) return fallback;
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw UsageError("--out must be csv or json");
}

inline Polarization polarization_of(const std::string& text) {
    if (text == "TE" || text == "te") return Polarization::TE;
    if (text == "TM" || text == "tm") return Polarization::TM;
    throw UsageError("--pol must be TE or TM");
}

inline std::string echo(const Text& t) { return t ? *t : std::string("default"); }

inline void warn_graphene_band(const std::vector<double>& freqs, std::ostream& err) {
    for (double f : freqs) {
        if (f > 10e12) {
            err << "warning: graphene intraband model evaluated above 10 THz; interband terms are neglected\n";
            return;
        }
    }
}

struct GrapheneFlags {
    Text mu_c, tau, temp;

    void attach(CLI::App* app) {
        app->add_option("--mu-c", mu_c, "graphene chemical potential (e.g. 0.3eV)");
        app->add_option("--tau", tau, "relaxation time (e.g. 1ps)");
        app->add_option("--temp", temp, "temperature (e.g. 300K)");
    }

    GrapheneParams resolve(const GrapheneParams& base) const {
        GrapheneParams p = base;
        p.mu_c = si_or(mu_c, p.mu_c, Dimension::energy, Unit::eV, "--mu-c");
        p.tau = si_or(tau, p.tau, Dimension::time, Unit::s, "--tau");
        p.temp = si_or(temp, p.temp, Dimension::temperature, Unit::K, "--temp");
        return p;
    }

    void describe(OutputRecord& rec) const {
        rec.meta.emplace_back("mu_c", echo(mu_c));
        rec.meta.emplace_back("tau", echo(tau));
        rec.meta.emplace_back("temp", echo(temp));
    }
};

struct EnvFlags {
    Text eps1, eps2;

    void attach(CLI::App* app) {
        app->add_option("--eps1", eps1, "relative permittivity above the sheet");
        app->add_option("--eps2", eps2, "relative permittivity below the sheet");
    }

    DielectricEnvironment resolve(const DielectricEnvironment& base) const {
        DielectricEnvironment env = base;
        if (eps1) env.eps1 = plain(*eps1, "--eps1");
        if (eps2) env.eps2 = plain(*eps2, "--eps2");
        return env;
    }

    void describe(OutputRecord& rec) const {
        rec.meta.emplace_back("eps1", echo(eps1));
        rec.meta.emplace_back("eps2", echo(eps2));
    }
};

struct MaterialFlags {
    std::string material = "graphene";
    GrapheneFlags graphene;
    Text radius, vf, cnt_tau, sigma0, cu_tau;

    void attach(CLI::App* app) {
        app->add_option("--material", material, "graphene | cnt | copper")
            ->check(CLI::IsMember({"graphene", "cnt", "copper"}));
        graphene.attach(app);
        app->add_option("--radius", radius, "CNT radius (e.g. 2.712nm)");
        app->add_option("--vf", vf, "CNT Fermi velocity in m/s");
        app->add_option("--cnt-tau", cnt_tau, "CNT relaxation time");
        app->add_option("--sigma0", sigma0, "copper DC conductivity in S/m");
        app->add_option("--cu-tau", cu_tau, "copper Drude relaxation time");
    }

    MaterialModel resolve(const Settings& s) const {
        if (material == "graphene") return graphene.resolve(s.graphene);
        if (material == "cnt") {
            CntParams p = s.cnt;
            p.radius = si_or(radius, p.radius, Dimension::length, Unit::m, "--radius");
            if (vf) p.vf = plain(*vf, "--vf");
            p.tau = si_or(cnt_tau, p.tau, Dimension::time, Unit::s, "--cnt-tau");
            return p;
        }
        CopperParams p = s.copper;
        if (sigma0) p.sigma0 = plain(*sigma0, "--sigma0");
        p.tau = si_or(cu_tau, p.tau, Dimension::time, Unit::s, "--cu-tau");
        return p;
    }

    void describe(OutputRecord& rec) const {
        rec.meta.emplace_back("material", material);
        if (material == "graphene") graphene.describe(rec);
        if (material == "cnt") {
            rec.meta.emplace_back("radius", echo(radius));
            rec.meta.emplace_back("vf", echo(vf));
            rec.meta.emplace_back("cnt_tau", echo(cnt_tau));
        }
        if (material == "copper") {
            rec.meta.emplace_back("sigma0", echo(sigma0));
            rec.meta.emplace_back("cu_tau", echo(cu_tau));
        }
    }
};

inline GateStack resolve_stack(const std::string& name, const Text& cox, const Text& thickness, const Text& eps_r,
                               const Settings& s) {
    if (!cox && !thickness) {
        if (name != "table2") throw UsageError("unknown gate stack '" + name + "' (known: table2)");
        return s.table2();
    }
    const double er = eps_r ? plain(*eps_r, "--eps-r") : s.gate_eps_r;
    if (thickness) {
        if (cox) throw UsageError("--cox and --thickness are exclusive");
        return GateStack::from_oxide(si(*thickness, Dimension::length, Unit::m, "--thickness"), er, s.graphene_vf);
    }
    return GateStack::from_capacitance(si(*cox, Dimension::capacitance_per_area, Unit::F_per_m2, "--cox"), er,
                                       s.graphene_vf);
}

struct Runner {
    std::ostream& out;
    std::ostream& err;
    Common common;
    Settings settings;
    std::function<OutputRecord()> command;
    OutputFormat default_format = OutputFormat::csv;
};

}  // namespace detail

/// Runs the tool on `argv` (argv[0] is the program name).
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    using namespace detail;
    Runner r{out, err, {}, {}, {}, OutputFormat::csv};

    CLI::App app{"thzkit: THz material, plasmonic antenna, link-budget and hypersurface modeling"};
    app.name("thzkit");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--config", r.common.config, "key=value parameter file (falls back to $THZKIT_CONFIG)");
    app.add_option("--out", r.common.out, "output format: csv | json");
    app.add_option("--workers", r.common.workers, "worker threads for sweeps (0 = hardware)");

    auto with_workers = [&](std::size_t n, auto fn) {
        return parallel_map(n, fn, r.common.workers ? r.common.workers : std::thread::hardware_concurrency());
    };

    // ---------------------------------------------------------- material
    auto* material = app.add_subcommand("material", "conductivity, impedance and skin depth");
    material->require_subcommand(1);
    MaterialFlags mat_flags;
    Text mat_f, mat_sweep;
    for (const char* name : {"sigma", "impedance", "skin-depth"}) {
        auto* sub = material->add_subcommand(name);
        mat_flags.attach(sub);
        sub->add_option("--f", mat_f, "frequency or comma list (e.g. 1THz)");
        sub->add_option("--f-sweep", mat_sweep, "frequency sweep start:stop:step<unit>");
        const std::string op = name;
        sub->callback([&, op] {
            r.command = [&, op] {
                const auto model = mat_flags.resolve(r.settings);
                const auto freqs = points(mat_f, mat_sweep, Dimension::frequency, Unit::Hz, "--f", "--f-sweep");
                if (model.index() == 0) warn_graphene_band(freqs, r.err);
                OutputRecord rec;
                rec.meta.emplace_back("command", "material " + op);
                mat_flags.describe(rec);
                rec.meta.emplace_back("f", mat_sweep ? "sweep:" + *mat_sweep : echo(mat_f));
                if (op == "sigma") {
                    rec.columns = {"f_THz", "re_sigma", "im_sigma"};
                    rec.meta.emplace_back("sigma_unit", model.index() == 2 ? "S/m" : "S");
                    for (double f : freqs) {
                        const auto s = conductivity(f, model);
                        rec.add_row({f / 1e12, s.real(), s.imag()});
                    }
                } else if (op == "impedance") {
                    rec.columns = {"f_THz", "re_z", "im_z"};
                    const char* unit = model.index() == 0 ? "ohm/sq" : model.index() == 1 ? "ohm/m" : "ohm";
                    rec.meta.emplace_back("z_unit", unit);
                    for (double f : freqs) {
                        const auto z = impedance(f, model).z;
                        rec.add_row({f / 1e12, z.real(), z.imag()});
                    }
                } else {
                    if (model.index() != 2) throw UsageError("skin-depth is defined for --material copper only");
                    rec.columns = {"f_THz", "skin_depth_nm"};
                    for (double f : freqs) {
                        rec.add_row({f / 1e12, copper_skin_depth(f, std::get<CopperParams>(model)) * 1e9});
                    }
                }
                return rec;
            };
        });
    }

    // --------------------------------------------------------------- spp
    auto* spp = app.add_subcommand("spp", "graphene SPP dispersion sweep");
    GrapheneFlags spp_g;
    EnvFlags spp_env;
    Text spp_f, spp_sweep;
    std::string spp_model = "exact";
    spp_g.attach(spp);
    spp_env.attach(spp);
    spp->add_option("--f", spp_f, "frequency or comma list");
    spp->add_option("--f-sweep", spp_sweep, "frequency sweep start:stop:step<unit>");
    spp->add_option("--model", spp_model, "exact | quasistatic")->check(CLI::IsMember({"exact", "quasistatic"}));
    spp->callback([&] {
        r.command = [&] {
            const auto g = spp_g.resolve(r.settings.graphene);
            const auto env = spp_env.resolve({1.0, 1.0});
            const auto freqs = points(spp_f, spp_sweep, Dimension::frequency, Unit::Hz, "--f", "--f-sweep");
            warn_graphene_band(freqs, r.err);
            const bool exact = spp_model == "exact";
            const auto modes = with_workers(freqs.size(), [&](std::size_t i) {
                const auto sigma = graphene_sigma_intra(freqs[i], g);
                return exact ? spp_exact(freqs[i], sigma, env) : spp_quasistatic(freqs[i], sigma, env);
            });
            OutputRecord rec;
            rec.meta.emplace_back("command", "spp");
            rec.meta.emplace_back("model", spp_model);
            spp_g.describe(rec);
            spp_env.describe(rec);
            rec.meta.emplace_back("f", spp_sweep ? "sweep:" + *spp_sweep : echo(spp_f));
            rec.columns = {"f_THz", "re_kspp", "im_kspp", "lambda_spp_um", "confinement", "prop_length_um"};
            for (const auto& m : modes) {
                rec.add_row({m.f / 1e12, m.k_spp.real(), m.k_spp.imag(), m.lambda_spp * 1e6, m.confinement,
                             m.prop_length * 1e6});
            }
            return rec;
        };
    });

    // -------------------------------------------------------------- tune
    auto* tune = app.add_subcommand("tune", "gate voltage -> carrier density -> chemical potential");
    std::string tune_stack = "table2";
    Text tune_vg, tune_sweep, tune_cox, tune_t, tune_er;
    tune->add_option("--stack", tune_stack, "gate stack preset (table2)");
    tune->add_option("--preset", tune_stack, "alias of --stack");
    tune->add_option("--cox", tune_cox, "gate capacitance (F/m2) instead of a preset");
    tune->add_option("--thickness", tune_t, "oxide thickness instead of a preset");
    tune->add_option("--eps-r", tune_er, "oxide relative permittivity");
    tune->add_option("--vg", tune_vg, "gate voltage or comma list (V)");
    tune->add_option("--vg-sweep", tune_sweep, "gate voltage sweep start:stop:step");
    tune->callback([&] {
        r.command = [&] {
            const auto stack = resolve_stack(tune_stack, tune_cox, tune_t, tune_er, r.settings);
            const auto vgs = points(tune_vg, tune_sweep, Dimension::voltage, Unit::V, "--vg", "--vg-sweep");
            OutputRecord rec;
            rec.meta.emplace_back("command", "tune");
            rec.meta.emplace_back("stack", tune_cox || tune_t ? std::string("custom") : tune_stack);
            rec.meta.emplace_back("cox", format_number(stack.cox()));
            rec.meta.emplace_back("vf", format_number(stack.vf()));
            rec.meta.emplace_back("vg", tune_sweep ? "sweep:" + *tune_sweep : echo(tune_vg));
            rec.columns = {"vg_V", "n_per_cm2", "E_MV_per_cm", "mu_c_eV"};
            for (double vg : vgs) {
                const auto op = operating_point(vg, stack);
                rec.add_row({vg, op.n * 1e-4, op.e_field * 1e-8, joule_to_ev(op.mu_c)});
            }
            return rec;
        };
    });

    // ----------------------------------------------------------- antenna
    auto* antenna = app.add_subcommand("antenna", "dipole nanoantenna resonance and directivity");
    antenna->require_subcommand(1);

    auto* resonance = antenna->add_subcommand("resonance", "half-wave resonance of a dipole");
    MaterialFlags res_mat;
    EnvFlags res_env;
    Text res_len;
    int res_order = 1;
    Text res_height;
    res_mat.attach(resonance);
    res_env.attach(resonance);
    resonance->add_option("--length", res_len, "antenna length or comma list (e.g. 68um)")->required();
    resonance->add_option("--mode-order", res_order, "resonance order (1 = half wave)");
    resonance->add_option("--cnt-height-ratio", res_height, "CNT height over ground in radii");
    resonance->callback([&] {
        r.command = [&] {
            const auto model = res_mat.resolve(r.settings);
            const auto env = res_env.resolve(r.settings.antenna_env);
            auto geom = r.settings.cnt_line;
            if (res_height) geom.height_ratio = plain(*res_height, "--cnt-height-ratio");
            const auto lengths = list(*res_len, Dimension::length, Unit::m, "--length");
            const auto pts = with_workers(lengths.size(), [&](std::size_t i) {
                return resonant_frequency(AntennaSpec{model, lengths[i], env, res_order, geom});
            });
            OutputRecord rec;
            rec.meta.emplace_back("command", "antenna resonance");
            res_mat.describe(rec);
            res_env.describe(rec);
            rec.meta.emplace_back("mode_order", std::to_string(res_order));
            rec.columns = {"length_um", "f_r_THz", "lambda_eff_um", "miniaturization"};
            for (std::size_t i = 0; i < pts.size(); ++i) {
                rec.add_row({lengths[i] * 1e6, pts[i].f_r / 1e12, pts[i].lambda_eff * 1e6, pts[i].miniaturization});
            }
            return rec;
        };
    });

    auto* atune = antenna->add_subcommand("tune", "graphene antenna resonance versus gate voltage");
    std::string at_stack = "table2";
    Text at_len, at_vg, at_sweep, at_cox, at_t, at_er, at_tau, at_temp;
    EnvFlags at_env;
    int at_order = 1;
    atune->add_option("--length", at_len, "antenna length (e.g. 20um)")->required();
    atune->add_option("--stack", at_stack, "gate stack preset (table2)");
    atune->add_option("--cox", at_cox, "gate capacitance (F/m2) instead of a preset");
    atune->add_option("--thickness", at_t, "oxide thickness instead of a preset");
    atune->add_option("--eps-r", at_er, "oxide relative permittivity");
    atune->add_option("--vg", at_vg, "gate voltage or comma list (V)");
    atune->add_option("--vg-sweep", at_sweep, "gate voltage sweep");
    atune->add_option("--tau", at_tau, "graphene relaxation time");
    atune->add_option("--temp", at_temp, "temperature");
    atune->add_option("--mode-order", at_order, "resonance order");
    at_env.attach(atune);
    atune->callback([&] {
        r.command = [&] {
            const auto stack = resolve_stack(at_stack, at_cox, at_t, at_er, r.settings);
            const auto vgs = points(at_vg, at_sweep, Dimension::voltage, Unit::V, "--vg", "--vg-sweep");
            const double length = si(*at_len, Dimension::length, Unit::m, "--length");
            const double tau = si_or(at_tau, r.settings.graphene.tau, Dimension::time, Unit::s, "--tau");
            const double temp = si_or(at_temp, r.settings.graphene.temp, Dimension::temperature, Unit::K, "--temp");
            const auto env = at_env.resolve(r.settings.antenna_env);
            const auto pts = with_workers(vgs.size(), [&](std::size_t i) {
                return tuning_curve(length, stack, std::span(&vgs[i], 1), env, tau, temp, at_order).front();
            });
            OutputRecord rec;
            rec.meta.emplace_back("command", "antenna tune");
            rec.meta.emplace_back("length", *at_len);
            rec.meta.emplace_back("stack", at_cox || at_t ? std::string("custom") : at_stack);
            rec.meta.emplace_back("tau", echo(at_tau));
            rec.meta.emplace_back("temp", echo(at_temp));
            at_env.describe(rec);
            rec.meta.emplace_back("vg", at_sweep ? "sweep:" + *at_sweep : echo(at_vg));
            rec.columns = {"vg_V", "mu_c_eV", "f_r_THz"};
            for (const auto& p : pts) rec.add_row({p.vg, joule_to_ev(p.mu_c), p.f_r / 1e12});
            return rec;
        };
    });

    auto* directivity = antenna->add_subcommand("directivity", "sinusoidal-current dipole directivity");
    Text dir_kl, dir_len, dir_k;
    directivity->add_option("--keff-l", dir_kl, "electrical length k_eff*L (rad) or comma list");
    directivity->add_option("--length", dir_len, "physical length (with --keff)");
    directivity->add_option("--keff", dir_k, "guided wavenumber in rad/m (with --length)");
    directivity->callback([&] {
        r.command = [&] {
            std::vector<double> kls;
            if (dir_kl) {
                if (dir_len || dir_k) throw UsageError("--keff-l excludes --length/--keff");
                kls = list(*dir_kl, Dimension::dimensionless, Unit::none, "--keff-l");
            } else if (dir_len && dir_k) {
                kls = {si(*dir_len, Dimension::length, Unit::m, "--length") * plain(*dir_k, "--keff")};
            } else {
                throw UsageError("give --keff-l, or both --length and --keff");
            }
            OutputRecord rec;
            rec.meta.emplace_back("command", "antenna directivity");
            rec.meta.emplace_back("keff_l", dir_kl ? *dir_kl : format_number(kls.front()));
            rec.columns = {"keff_l", "directivity_dBi"};
            for (double kl : kls) rec.add_row({kl, dipole_directivity(1.0, kl)});
            return rec;
        };
    });

    auto* reference = antenna->add_subcommand("reference", "published full-wave FEM reference values");
    reference->callback([&] {
        r.command = [&] {
            OutputRecord rec;
            rec.meta.emplace_back("command", "antenna reference");
            rec.meta.emplace_back("note", "published_FEM_reference_not_computed");
            rec.columns = {"index", "value"};
            for (std::size_t i = 0; i < kFemReference.size(); ++i) {
                const auto& row = kFemReference[i];
                rec.add_row({static_cast<double>(i), row.value});
                rec.summary.emplace_back(std::string(row.table) + "." + std::string(row.label) + "[" +
                                             std::string(row.unit) + "]",
                                         row.value);
            }
            return rec;
        };
    });

    // -------------------------------------------------------------- link
    auto* link = app.add_subcommand("link", "THz path loss and received power");
    Text link_f, link_d, link_dsweep, link_file, link_ptx, link_gt, link_gr;
    link->add_option("--f", link_f, "carrier frequency (e.g. 1THz)")->required();
    link->add_option("--d", link_d, "distance (e.g. 10m)");
    link->add_option("--d-sweep", link_dsweep, "distance sweep start:stop:step<unit>");
    link->add_option("--absorption-file", link_file, "CSV with header f_hz,k_per_m");
    link->add_option("--ptx", link_ptx, "transmit power (dBm)");
    link->add_option("--gt", link_gt, "transmit antenna gain (dBi)");
    link->add_option("--gr", link_gr, "receive antenna gain (dBi)");
    link->callback([&] {
        if (link_dsweep) r.default_format = OutputFormat::csv;
        else r.default_format = OutputFormat::json;
        r.command = [&] {
            LinkParams lp;
            lp.f = si(*link_f, Dimension::frequency, Unit::Hz, "--f");
            lp.p_tx = si_or(link_ptx, 0.0, Dimension::log_power, Unit::dBm, "--ptx");
            lp.g_tx = si_or(link_gt, 0.0, Dimension::log_gain, Unit::dBi, "--gt");
            lp.g_rx = si_or(link_gr, 0.0, Dimension::log_gain, Unit::dBi, "--gr");
            const auto ds = points(link_d, link_dsweep, Dimension::length, Unit::m, "--d", "--d-sweep");
            const auto table = link_file ? AbsorptionTable::load_csv(*link_file) : AbsorptionTable::transparent();
            OutputRecord rec;
            rec.meta.emplace_back("command", "link");
            rec.meta.emplace_back("f", *link_f);
            rec.meta.emplace_back("d", link_dsweep ? "sweep:" + *link_dsweep : echo(link_d));
            rec.meta.emplace_back("absorption_file", link_file ? *link_file : std::string("none"));
            rec.meta.emplace_back("ptx", echo(link_ptx));
            rec.meta.emplace_back("gt", echo(link_gt));
            rec.meta.emplace_back("gr", echo(link_gr));
            rec.columns = {"f_hz", "d_m", "spreading_loss_db", "absorption_loss_db", "total_path_loss_db",
                           "received_power_dbm"};
            for (double d : ds) {
                lp.d = d;
                rec.add_row({lp.f, d, spreading_loss_db(lp.f, d), absorption_loss_db(lp.f, d, table),
                             total_path_loss_db(lp.f, d, table), received_power_dbm(lp, table)});
            }
            return rec;
        };
    });

    // --------------------------------------------------------------- hsf
    auto* hsf = app.add_subcommand("hsf", "graphene hypersurface reflection");
    hsf->require_subcommand(0, 1);
    std::string hsf_preset = "fig4";
    std::string hsf_pol = "TM";
    Text hsf_f, hsf_sweep, hsf_theta, hsf_thick, hsf_er, hsf_fill;
    GrapheneFlags hsf_g;
    hsf->add_option("--preset", hsf_preset, "cell preset (fig4)");
    hsf->add_option("--f", hsf_f, "frequency or comma list");
    hsf->add_option("--f-sweep", hsf_sweep, "frequency sweep start:stop:step<unit>");
    hsf->add_option("--theta", hsf_theta, "incidence angle (e.g. 30deg)");
    hsf->add_option("--pol", hsf_pol, "TE | TM");
    hsf->add_option("--thickness", hsf_thick, "slab thickness");
    hsf->add_option("--eps-slab", hsf_er, "slab relative permittivity");
    hsf->add_option("--fill", hsf_fill, "graphene fill factor in (0, 1]");
    hsf_g.attach(hsf);
    auto* coverage = hsf->add_subcommand("coverage", "reflection phase span over a bias sweep");
    Text cov_sweep, cov_list;
    coverage->add_option("--mu-c-sweep", cov_sweep, "chemical potential sweep (e.g. 0.1:1.0:0.02eV)");
    coverage->add_option("--mu-c-list", cov_list, "comma list of chemical potentials");

    auto hsf_cell = [&] {
        if (hsf_preset != "fig4") throw UsageError("unknown hypersurface preset '" + hsf_preset + "' (known: fig4)");
        HsfCell cell = fig4_cell();
        cell.graphene = hsf_g.resolve(cell.graphene);
        if (hsf_thick) cell.slab_thickness = si(*hsf_thick, Dimension::length, Unit::m, "--thickness");
        if (hsf_er) cell.slab_rel_permittivity = plain(*hsf_er, "--eps-slab");
        if (hsf_fill) cell.fill_factor = plain(*hsf_fill, "--fill");
        return cell;
    };
    auto hsf_describe = [&](OutputRecord& rec, const HsfCell& cell) {
        rec.meta.emplace_back("preset", hsf_preset);
        rec.meta.emplace_back("theta", echo(hsf_theta));
        rec.meta.emplace_back("pol", hsf_pol);
        rec.meta.emplace_back("thickness_m", format_number(cell.slab_thickness));
        rec.meta.emplace_back("eps_slab", format_number(cell.slab_rel_permittivity));
        rec.meta.emplace_back("fill", format_number(cell.fill_factor));
        rec.meta.emplace_back("tau_s", format_number(cell.graphene.tau));
        rec.meta.emplace_back("temp_K", format_number(cell.graphene.temp));
    };
    hsf->callback([&] {
        if (coverage->parsed()) return;
        r.command = [&] {
            const auto cell = hsf_cell();
            const double theta = si_or(hsf_theta, 0.0, Dimension::angle, Unit::rad, "--theta");
            const auto pol = polarization_of(hsf_pol);
            const auto freqs = points(hsf_f, hsf_sweep, Dimension::frequency, Unit::Hz, "--f", "--f-sweep");
            warn_graphene_band(freqs, r.err);
            const auto samples =
                with_workers(freqs.size(), [&](std::size_t i) { return reflection(freqs[i], cell, theta, pol); });
            OutputRecord rec;
            rec.meta.emplace_back("command", "hsf");
            hsf_describe(rec, cell);
            rec.meta.emplace_back("mu_c_eV", format_number(joule_to_ev(cell.graphene.mu_c)));
            rec.meta.emplace_back("f", hsf_sweep ? "sweep:" + *hsf_sweep : echo(hsf_f));
            rec.columns = {"f_THz", "re_gamma", "im_gamma", "efficiency", "phase_deg"};
            for (std::size_t i = 0; i < freqs.size(); ++i) {
                const auto& s = samples[i];
                rec.add_row({freqs[i] / 1e12, s.gamma.real(), s.gamma.imag(), s.efficiency, s.phase_deg});
            }
            return rec;
        };
    });
    coverage->callback([&] {
        r.command = [&] {
            const auto cell = hsf_cell();
            const double theta = si_or(hsf_theta, 0.0, Dimension::angle, Unit::rad, "--theta");
            const auto pol = polarization_of(hsf_pol);
            if (!hsf_f) throw UsageError("coverage needs --f");
            if (hsf_sweep) throw UsageError("coverage takes a single --f");
            const double f = si(*hsf_f, Dimension::frequency, Unit::Hz, "--f");
            const auto mus = points(cov_list, cov_sweep, Dimension::energy, Unit::eV, "--mu-c-list", "--mu-c-sweep");
            warn_graphene_band({f}, r.err);
            const double span = phase_coverage(f, cell, mus, theta, pol);
            OutputRecord rec;
            rec.meta.emplace_back("command", "hsf coverage");
            hsf_describe(rec, cell);
            rec.meta.emplace_back("f", *hsf_f);
            rec.meta.emplace_back("mu_c", cov_sweep ? "sweep:" + *cov_sweep : echo(cov_list));
            rec.columns = {"mu_c_eV", "efficiency", "phase_deg"};
            HsfCell c = cell;
            for (double mu : mus) {
                c.graphene.mu_c = mu;
                const auto s = reflection(f, c, theta, pol);
                rec.add_row({joule_to_ev(mu), s.efficiency, s.phase_deg});
            }
            rec.summary.emplace_back("phase_coverage_deg", span);
            return rec;
        };
    });

    // ------------------------------------------------------------ dispatch
    std::vector<const char*> cargv;
    cargv.reserve(argv.size());
    for (const auto& a : argv) cargv.push_back(a.c_str());
    try {
        if (cargv.empty()) throw UsageError("empty argument vector");
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        std::string config = r.common.config;
        if (config.empty()) {
            if (const char* env = std::getenv("THZKIT_CONFIG"); env && *env) config = env;
        }
        if (!config.empty()) apply_config_file(r.settings, config);
        if (!r.command) throw UsageError("no command selected");
        const auto fmt = format_of(r.common.out, r.default_format);
        OutputRecord rec = r.command();
        if (!config.empty()) rec.meta.emplace(rec.meta.begin() + 1, "config", config);
        // Only fully evaluated records reach the stream.
        std::ostringstream buffer;
        write(buffer, rec, fmt);
        out << buffer.str();
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace thzkit::cli
