#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsu11/gauss.hpp"
#include "tsu11/metrology.hpp"

// The seven sensing configurations and their closed-form sensitivities.
//
// Two-phase (probe phase phi1, conjugate phase phi2, equal loss eta per arm):
//   tsu_distributed       one bright twin-beam pair, one phase per arm
//   tsu_separable         two independent pairs, one phase each
//   classical_distributed coherent beams of matching power
//   classical_separable   two independent coherent pairs
// M-phase (lossless, photon budget n per phase element):
//   multi_classical, multi_separable, multi_entangled (twin beam + balanced
//   split network over d = M/2 outputs per arm).

namespace tsu11 {

enum class Scheme {
    tsu_distributed,
    tsu_separable,
    classical_distributed,
    classical_separable,
    multi_classical,
    multi_separable,
    multi_entangled,
};

const char* scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(const std::string& name);

struct InterferometerParams {
    double gain = 5.0;       // nonlinear gain G >= 1
    double alpha_sq = 100.0; // seed photons |alpha|^2 >= 0
    double eta = 1.0;        // transmission per arm, (0, 1]
    double g = 1.0;          // classical gain > 0
    double phi1 = 0.0;
    double phi2 = 0.0;

    void validate() const;
    // closed forms assume a bright seed; false marks alpha_sq < 10
    bool bright_beam() const { return alpha_sq >= 10.0; }
};

struct BetaWeights {
    double beta1 = 0.0;
    double beta2 = 0.0;
};

struct MultiPhaseParams {
    int m_phases = 2;          // M >= 1, even for the entangled scheme
    double n_per_phase = 100;  // mean photons per phase element > 0
    double gain = 5.0;
    double alpha_sq = 100.0;
};

struct LodResult {
    Scheme scheme = Scheme::tsu_distributed;
    double delta_phi_sq = 0.0;
    bool bright_beam = true;  // false flags alpha_sq < 10 (formulas assume bright beams)
    InterferometerParams two_phase{};  // snapshot for two-phase schemes
    MultiPhaseParams multi{};          // snapshot for M-phase schemes
};

// phi = beta1 phi1 + beta2 phi2 with beta1 = sqrt(G)/(sqrt(G)+g sqrt(G-1)),
// beta2 = g sqrt(G-1)/(sqrt(G)+g sqrt(G-1)); |beta1| + |beta2| = 1.
BetaWeights beta_weights(double gain, double g);

// Slope of the joint mean <X_+> with respect to the common phase:
// 2 sqrt(alpha_sq eta) (sqrt(G) + g sqrt(G-1)).
double two_phase_slope(const InterferometerParams& p);

// Small-phase variance of X_+ = X_probe + g X_conj:
// (g^2+1)(1 - 2 eta + 2 eta G) - 4 g eta sqrt(G(G-1)) cos(phi1 + phi2).
double two_phase_variance(const InterferometerParams& p);

LodResult lod_tsu_distributed(const InterferometerParams& p);
LodResult lod_tsu_separable(const InterferometerParams& p);     // exactly 2x distributed
LodResult lod_classical_distributed(const InterferometerParams& p);
LodResult lod_classical_separable(const InterferometerParams& p);  // exactly 2x

// Cramer-Rao bound of the distributed pair, saturated by g=1 homodyne readout:
// (1 - 2 eta + 2 eta G - 2 eta sqrt(G(G-1))) / (2 alpha_sq eta (sqrt(G)+sqrt(G-1))^2).
double qcrb_tsu(const InterferometerParams& p);

// Range of classical gains g where the twin-beam scheme beats the coherent
// benchmark at the same loss: roots of lod_tsu_distributed(g) =
// lod_classical_distributed(g).  The shared denominator and the
// loss-independent coherent variance make the endpoints
// ((sqrt(G)-1)/sqrt(G-1), (sqrt(G)+1)/sqrt(G-1)) for every eta in (0,1].
// Empty for G <= 1 where the two sensitivities coincide identically.
std::optional<std::pair<double, double>> advantage_g_window(double gain, double eta);

// Total photons at the phase elements: 2(G-1) + 4 G a^2 + 2 a^2 (-1 + 2 sqrt(G(G-1))).
double n_total(double gain, double alpha_sq);

// M-phase closed forms (lossless).
LodResult lod_multi_classical(int m_phases, double n_per_phase);           // 1/(4 M n)
LodResult lod_multi_separable(int m_phases, double n_per_phase);           // 1/(4 M n (n+1))
// (-1 + 2G - 2 sqrt(G(G-1))) / (8 a^2 (sqrt(G)+sqrt(G-1))^2); M-independent.
double lod_multi_entangled_raw(double gain, double alpha_sq);
LodResult lod_multi_entangled_optimal(int m_phases, double n_per_phase);   // 1/(2 M n (M n + 2))

struct OptimizerConfig {
    double g_tolerance = 1e-10;  // bracket width on G at convergence
    int max_iterations = 500;
};

struct EntangledOptimum {
    double gain = 1.0;
    double alpha_sq = 0.0;
    double delta_phi_sq = 0.0;
};

// Minimize lod_multi_entangled_raw subject to n_total(G, a^2) = M n.  The
// constraint is eliminated by a^2 = (M n - 2(G-1)) / (2(2G-1+2 sqrt(G(G-1))))
// and the remaining 1-D problem over G in (1, 1 + M n/2) is solved by
// golden-section search (the objective is strictly unimodal there).
EntangledOptimum optimize_entangled(int m_phases, double n_per_phase,
                                    const OptimizerConfig& config = {});

// Transmission that sets the g=1 joint-quadrature noise a given dB below the
// coherent benchmark g^2+1; bisection on the variance ratio.
double eta_for_noise_reduction_db(double gain, double g, double target_db);

// State builders.  Mode layout and homodyne channels are fixed so that the
// returned state fed to joint_quadrature_stats reproduces the closed forms.
GaussianState build_tsu_distributed(const InterferometerParams& p);   // modes (probe, conj)
GaussianState build_tsu_separable(const InterferometerParams& p);     // 4 modes, two pairs
GaussianState build_classical_distributed(const InterferometerParams& p);
GaussianState build_classical_separable(const InterferometerParams& p);

std::vector<HomodyneChannel> two_phase_channels(Scheme scheme, double g);

struct MultiEntangledNetwork {
    GaussianState state;
    std::vector<int> sensor_modes;  // mode carrying phases[j], in phase order
};

// Twin beam seeded on both inputs, split d = M/2 ways per arm, one phase per
// output mode.  phases.size() must equal M (even, >= 2).
MultiEntangledNetwork build_multi_entangled(int m_phases, double gain, double alpha_sq,
                                            const std::vector<double>& phases);

std::vector<HomodyneChannel> multi_entangled_channels(const MultiEntangledNetwork& net);

// Slope of the summed M-mode quadrature vs the common phase:
// 2 sqrt(2 M alpha_sq) (sqrt(G) + sqrt(G-1)).
double multi_entangled_slope(int m_phases, double gain, double alpha_sq);

}  // namespace tsu11
