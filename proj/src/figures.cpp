#include "tsu11/figures.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "tsu11/schemes.hpp"

namespace tsu11 {

void SweepSpec::validate() const {
    if (!(start < stop)) throw std::invalid_argument("sweep: start must be < stop");
    if (count < 2) throw std::invalid_argument("sweep: count must be >= 2");
    if (log_spaced && !(start > 0.0))
        throw std::invalid_argument("sweep: log spacing needs start > 0");
}

std::vector<double> SweepSpec::grid() const {
    validate();
    std::vector<double> g(count);
    if (log_spaced) {
        const double l0 = std::log(start), l1 = std::log(stop);
        for (int k = 0; k < count; ++k)
            g[k] = std::exp(l0 + (l1 - l0) * double(k) / double(count - 1));
    } else {
        for (int k = 0; k < count; ++k)
            g[k] = start + (stop - start) * double(k) / double(count - 1);
    }
    return g;
}

std::string format_sci(double value) {
    // never calls setlocale, so the C locale's '.' decimal point is in force
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9e", value);
    return buf;
}

namespace {

std::string eta_tag(double eta) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", eta);
    return buf;
}

void append_two_phase_block(std::string& out, const InterferometerParams& p) {
    out += ',';
    out += format_sci(lod_classical_separable(p).delta_phi_sq * p.alpha_sq);
    out += ',';
    out += format_sci(lod_classical_distributed(p).delta_phi_sq * p.alpha_sq);
    out += ',';
    out += format_sci(lod_tsu_separable(p).delta_phi_sq * p.alpha_sq);
    out += ',';
    out += format_sci(lod_tsu_distributed(p).delta_phi_sq * p.alpha_sq);
}

void append_header_block(std::string& out, double eta) {
    const std::string tag = eta_tag(eta);
    for (const char* name : {"lod_cla_sep", "lod_cla_dis", "lod_tsu_sep", "lod_tsu_dis"}) {
        out += ',';
        out += name;
        out += "_eta";
        out += tag;
    }
}

}  // namespace

std::string fig2c_csv(const Fig2cSpec& spec) {
    if (spec.sweep.variable != "G")
        throw std::invalid_argument("fig2c: sweep variable must be G");
    std::string out = "G";
    for (double eta : spec.etas) append_header_block(out, eta);
    out += '\n';
    for (double gain : spec.sweep.grid()) {
        out += format_sci(gain);
        for (double eta : spec.etas) {
            InterferometerParams p;
            p.gain = gain;
            p.alpha_sq = 1.0;  // columns carry LOD * alpha_sq, seed-independent
            p.eta = eta;
            p.g = spec.g;
            append_two_phase_block(out, p);
        }
        out += '\n';
    }
    return out;
}

std::string fig2d_csv(const Fig2dSpec& spec) {
    if (spec.sweep.variable != "g")
        throw std::invalid_argument("fig2d: sweep variable must be g");
    std::string out = "g";
    for (double eta : spec.etas) append_header_block(out, eta);
    out += '\n';
    for (double g : spec.sweep.grid()) {
        out += format_sci(g);
        for (double eta : spec.etas) {
            InterferometerParams p;
            p.gain = spec.gain;
            p.alpha_sq = 1.0;
            p.eta = eta;
            p.g = g;
            append_two_phase_block(out, p);
        }
        out += '\n';
    }
    if (const auto window = advantage_g_window(spec.gain, 1.0)) {
        out += "# advantage_g_window,";
        out += format_sci(window->first);
        out += ',';
        out += format_sci(window->second);
        out += '\n';
    }
    return out;
}

std::string fig5d_csv(const Fig5dSpec& spec) {
    if (spec.m_max < 2 || spec.m_max % 2 != 0)
        throw std::invalid_argument("fig5d: m_max must be even and >= 2");
    std::string out = "M,lod_classical,lod_separable,lod_entangled\n";
    for (int m = 2; m <= spec.m_max; m += 2) {
        out += format_sci(double(m));
        out += ',';
        out += format_sci(lod_multi_classical(m, spec.n_per_phase).delta_phi_sq);
        out += ',';
        out += format_sci(lod_multi_separable(m, spec.n_per_phase).delta_phi_sq);
        out += ',';
        out += format_sci(lod_multi_entangled_optimal(m, spec.n_per_phase).delta_phi_sq);
        out += '\n';
    }
    return out;
}

}  // namespace tsu11
