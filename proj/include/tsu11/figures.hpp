#pragma once

#include <string>
#include <vector>

// Figure sweeps as deterministic CSV text: one header line, scientific
// notation with 10 significant digits, LF endings.  Byte-identical output for
// identical parameters is a contract (golden files are diffed in CI).

namespace tsu11 {

struct SweepSpec {
    std::string variable;  // "g" | "G" | "eta" | "M" | "n"
    double start = 0.0;
    double stop = 0.0;
    int count = 2;
    bool log_spaced = false;

    void validate() const;                 // start < stop, count >= 2
    std::vector<double> grid() const;
};

// value -> "d.dddddddddde+xx" (10 significant digits), locale-independent.
std::string format_sci(double value);

struct Fig2cSpec {
    double g = 1.0;
    std::vector<double> etas = {1.0, 0.8};
    SweepSpec sweep{"G", 1.01, 10.0, 900, false};
};

struct Fig2dSpec {
    double gain = 5.0;
    std::vector<double> etas = {1.0, 0.8};
    SweepSpec sweep{"g", 0.1, 3.0, 291, false};
};

struct Fig5dSpec {
    double n_per_phase = 100.0;
    int m_max = 100;  // even M in [2, m_max]
};

// Columns G, then {cla_sep, cla_dis, tsu_sep, tsu_dis} x eta, all LODs
// pre-multiplied by |alpha|^2 (the product is seed-independent).
std::string fig2c_csv(const Fig2cSpec& spec = {});

// Columns g, same scheme block per eta, plus a trailing comment line with the
// advantage window.
std::string fig2d_csv(const Fig2dSpec& spec = {});

// Columns M, lod_classical, lod_separable, lod_entangled.
std::string fig5d_csv(const Fig5dSpec& spec = {});

}  // namespace tsu11
