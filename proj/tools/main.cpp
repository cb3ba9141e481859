// Command-line front end: figure sweeps as CSV, single-point sensitivity
// reports, Monte Carlo verification runs, and the SNR noise-floor correction.
//
// Exit codes: 0 success, 2 invalid arguments, 3 numerical failure
// (singular covariance, infeasible budget, unwritable output path).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsu11/figures.hpp"
#include "tsu11/metrology.hpp"
#include "tsu11/montecarlo.hpp"
#include "tsu11/schemes.hpp"

namespace {

using tsu11::format_sci;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw std::runtime_error("cannot open output path: " + path);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

tsu11::Scheme parse_scheme(const std::string& name) {
    const auto scheme = tsu11::scheme_from_name(name);
    if (!scheme) throw std::invalid_argument("unknown scheme: " + name);
    return *scheme;
}

bool is_two_phase(tsu11::Scheme s) {
    return s == tsu11::Scheme::tsu_distributed || s == tsu11::Scheme::tsu_separable ||
           s == tsu11::Scheme::classical_distributed ||
           s == tsu11::Scheme::classical_separable;
}

std::string two_phase_prefix(tsu11::Scheme scheme, const tsu11::InterferometerParams& p) {
    std::string line = "scheme=";
    line += tsu11::scheme_name(scheme);
    line += " G=" + format_sci(p.gain);
    line += " alpha_sq=" + format_sci(p.alpha_sq);
    line += " eta=" + format_sci(p.eta);
    line += " g=" + format_sci(p.g);
    return line;
}

struct LodOptions {
    std::string scheme_name = "tsu-dis";
    tsu11::InterferometerParams params{};
    int m_phases = 2;
    double n_per_phase = 100.0;
    bool have_multi_budget = false;   // --M/--n given
    bool have_gain_params = false;    // --G/--alpha-sq given
};

std::string lod_report(const LodOptions& opt) {
    const auto scheme = parse_scheme(opt.scheme_name);
    if (is_two_phase(scheme)) {
        opt.params.validate();
        tsu11::LodResult r;
        switch (scheme) {
            case tsu11::Scheme::tsu_distributed:
                r = tsu11::lod_tsu_distributed(opt.params);
                break;
            case tsu11::Scheme::tsu_separable:
                r = tsu11::lod_tsu_separable(opt.params);
                break;
            case tsu11::Scheme::classical_distributed:
                r = tsu11::lod_classical_distributed(opt.params);
                break;
            default:
                r = tsu11::lod_classical_separable(opt.params);
                break;
        }
        std::string line = two_phase_prefix(scheme, opt.params);
        line += " lod=" + format_sci(r.delta_phi_sq);
        if (!r.bright_beam) line += " bright_beam=0";
        line += '\n';
        return line;
    }

    std::string line = "scheme=";
    line += tsu11::scheme_name(scheme);
    if (scheme == tsu11::Scheme::multi_classical) {
        const auto r = tsu11::lod_multi_classical(opt.m_phases, opt.n_per_phase);
        line += " M=" + std::to_string(opt.m_phases);
        line += " n=" + format_sci(opt.n_per_phase);
        line += " lod=" + format_sci(r.delta_phi_sq);
    } else if (scheme == tsu11::Scheme::multi_separable) {
        const auto r = tsu11::lod_multi_separable(opt.m_phases, opt.n_per_phase);
        line += " M=" + std::to_string(opt.m_phases);
        line += " n=" + format_sci(opt.n_per_phase);
        line += " lod=" + format_sci(r.delta_phi_sq);
    } else {
        // Entangled: explicit (G, alpha_sq) reports the raw sensitivity; a
        // photon budget (M, n) reports the optimum under n_total = M n.
        if (opt.have_gain_params && !opt.have_multi_budget) {
            const double raw =
                tsu11::lod_multi_entangled_raw(opt.params.gain, opt.params.alpha_sq);
            line += " G=" + format_sci(opt.params.gain);
            line += " alpha_sq=" + format_sci(opt.params.alpha_sq);
            line += " lod=" + format_sci(raw);
        } else {
            const auto best = tsu11::optimize_entangled(opt.m_phases, opt.n_per_phase);
            line += " M=" + std::to_string(opt.m_phases);
            line += " n=" + format_sci(opt.n_per_phase);
            line += " G=" + format_sci(best.gain);
            line += " alpha_sq=" + format_sci(best.alpha_sq);
            line += " lod=" + format_sci(best.delta_phi_sq);
        }
    }
    line += '\n';
    return line;
}

std::string mc_report(const LodOptions& opt, const tsu11::McConfig& config) {
    const auto scheme = parse_scheme(opt.scheme_name);
    tsu11::McResult r;
    std::string line;
    if (is_two_phase(scheme)) {
        r = tsu11::mc_lod(scheme, opt.params, config);
        line = two_phase_prefix(scheme, opt.params);
    } else if (scheme == tsu11::Scheme::multi_entangled) {
        double gain = opt.params.gain;
        double alpha_sq = opt.params.alpha_sq;
        if (!opt.have_gain_params) {
            const auto best = tsu11::optimize_entangled(opt.m_phases, opt.n_per_phase);
            gain = best.gain;
            alpha_sq = best.alpha_sq;
        }
        r = tsu11::mc_lod_multi_entangled(opt.m_phases, gain, alpha_sq, config);
        line = "scheme=";
        line += tsu11::scheme_name(scheme);
        line += " M=" + std::to_string(opt.m_phases);
        line += " G=" + format_sci(gain);
        line += " alpha_sq=" + format_sci(alpha_sq);
    } else {
        throw std::invalid_argument(
            "mc supports the two-phase schemes and multi-ent, not " + opt.scheme_name);
    }
    line += " samples=" + std::to_string(config.samples);
    line += " seed=" + std::to_string(config.seed);
    line += " empirical=" + format_sci(r.empirical_lod);
    line += " analytic=" + format_sci(r.analytic_lod);
    line += " stderr=" + format_sci(r.standard_error);
    line += " z=" + format_sci(r.z_score);
    line += " rng=" + r.rng;
    line += '\n';
    return line;
}

void add_two_phase_flags(CLI::App* cmd, LodOptions& opt) {
    cmd->add_option("--G", opt.params.gain, "nonlinear gain G >= 1");
    cmd->add_option("--alpha-sq", opt.params.alpha_sq, "seed photon number |alpha|^2");
    cmd->add_option("--eta", opt.params.eta, "transmission per arm, (0, 1]");
    cmd->add_option("--g", opt.params.g, "classical gain of the conjugate readout");
}

void add_multi_flags(CLI::App* cmd, LodOptions& opt) {
    cmd->add_option("--M", opt.m_phases, "number of unknown phases");
    cmd->add_option("--n", opt.n_per_phase, "photon budget per phase element");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truncated SU(1,1) sensing toolkit: figure sweeps, closed-form and "
                 "Monte Carlo sensitivities, SNR correction"};
    app.require_subcommand(1);

    // fig2c: LOD * |alpha|^2 vs G for the four two-phase schemes.
    auto* fig2c = app.add_subcommand("fig2c", "sweep LOD * |alpha|^2 over the gain G");
    tsu11::Fig2cSpec spec2c;
    std::string out2c;
    fig2c->add_option("--out", out2c, "output CSV path (default stdout)");
    fig2c->add_option("--g", spec2c.g, "classical gain (default 1)");
    fig2c->add_option("--eta", spec2c.etas, "transmission values (default 1 0.8)");
    fig2c->add_option("--start", spec2c.sweep.start, "first G (default 1.01)");
    fig2c->add_option("--stop", spec2c.sweep.stop, "last G (default 10)");
    fig2c->add_option("--count", spec2c.sweep.count, "grid points (default 900)");
    fig2c->callback([&] { write_output(out2c, tsu11::fig2c_csv(spec2c)); });

    // fig2d: LOD * |alpha|^2 vs g at fixed G, plus the advantage window.
    auto* fig2d = app.add_subcommand("fig2d", "sweep LOD * |alpha|^2 over the classical gain g");
    tsu11::Fig2dSpec spec2d;
    std::string out2d;
    fig2d->add_option("--out", out2d, "output CSV path (default stdout)");
    fig2d->add_option("--G", spec2d.gain, "nonlinear gain (default 5)");
    fig2d->add_option("--eta", spec2d.etas, "transmission values (default 1 0.8)");
    fig2d->add_option("--start", spec2d.sweep.start, "first g (default 0.1)");
    fig2d->add_option("--stop", spec2d.sweep.stop, "last g (default 3)");
    fig2d->add_option("--count", spec2d.sweep.count, "grid points (default 291)");
    fig2d->callback([&] { write_output(out2d, tsu11::fig2d_csv(spec2d)); });

    // fig5d: M-phase LODs vs M at fixed per-phase budget n.
    auto* fig5d = app.add_subcommand("fig5d", "sweep M-phase LODs over the phase count M");
    tsu11::Fig5dSpec spec5d;
    std::string out5d;
    fig5d->add_option("--out", out5d, "output CSV path (default stdout)");
    fig5d->add_option("--n", spec5d.n_per_phase, "photons per phase element (default 100)");
    fig5d->add_option("--m-max", spec5d.m_max, "largest even M (default 100)");
    fig5d->callback([&] { write_output(out5d, tsu11::fig5d_csv(spec5d)); });

    // lod: single-point closed-form sensitivity.
    auto* lod_cmd = app.add_subcommand("lod", "closed-form limit of detection for one scheme");
    LodOptions lod_opt;
    lod_cmd->add_option("--scheme", lod_opt.scheme_name,
                        "tsu-dis | tsu-sep | cla-dis | cla-sep | multi-cla | multi-sep | multi-ent")
        ->required();
    add_two_phase_flags(lod_cmd, lod_opt);
    add_multi_flags(lod_cmd, lod_opt);
    lod_cmd->callback([&] {
        lod_opt.have_multi_budget =
            lod_cmd->count("--M") > 0 || lod_cmd->count("--n") > 0;
        lod_opt.have_gain_params =
            lod_cmd->count("--G") > 0 || lod_cmd->count("--alpha-sq") > 0;
        std::cout << lod_report(lod_opt);
    });

    // mc: sampling oracle against the closed form.
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo check of the closed-form LOD");
    LodOptions mc_opt;
    tsu11::McConfig mc_config;
    mc_cmd->add_option("--scheme", mc_opt.scheme_name,
                       "tsu-dis | tsu-sep | cla-dis | cla-sep | multi-ent")
        ->required();
    add_two_phase_flags(mc_cmd, mc_opt);
    add_multi_flags(mc_cmd, mc_opt);
    mc_cmd->add_option("--samples", mc_config.samples, "samples, >= 1000 (default 1e6)");
    mc_cmd->add_option("--seed", mc_config.seed, "RNG seed (default 1)");
    mc_cmd->callback([&] {
        mc_opt.have_multi_budget =
            mc_cmd->count("--M") > 0 || mc_cmd->count("--n") > 0;
        mc_opt.have_gain_params =
            mc_cmd->count("--G") > 0 || mc_cmd->count("--alpha-sq") > 0;
        std::cout << mc_report(mc_opt, mc_config);
    });

    // snr-correct: subtract the noise floor from a spectrum-analyzer reading.
    auto* snr_cmd = app.add_subcommand("snr-correct", "noise-floor-corrected SNR in dB");
    double measured_dbm = 0.0, noise_dbm = 0.0;
    snr_cmd->add_option("--measured-dbm", measured_dbm, "measured signal power (dBm)")
        ->required();
    snr_cmd->add_option("--noise-dbm", noise_dbm, "noise floor power (dBm)")->required();
    snr_cmd->callback([&] {
        std::cout << "corrected_snr_db="
                  << format_sci(tsu11::snr_correct_db(measured_dbm, noise_dbm)) << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version keep 0, bad usage is 2
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
