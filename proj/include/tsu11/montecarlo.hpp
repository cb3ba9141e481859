#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tsu11/metrology.hpp"
#include "tsu11/schemes.hpp"

// Sampling oracle: draws homodyne records from the exact Gaussian statistics
// of a built scheme and checks the empirical LOD against the closed form.
//
// Stream derivation: uniform u(seed, counter) = avalanche(premix(seed) +
// (counter+1) * 0x9E3779B97F4A7C15), i.e. SplitMix64 evaluated at an absolute
// counter position; normals by Box-Muller.  Sample i, channel j consumes
// counters (i*K + j)*2 and (i*K + j)*2 + 1, so draws are order-independent
// and any partition by sample-index ranges sees disjoint streams.

namespace tsu11 {

struct McConfig {
    std::int64_t samples = 1'000'000;  // >= 1000
    std::uint64_t seed = 1;
};

struct McResult {
    double empirical_lod = 0.0;
    double standard_error = 0.0;  // empirical_lod * sqrt(2/(samples-1))
    double analytic_lod = 0.0;
    double z_score = 0.0;
    std::string rng = "splitmix64-counter/box-muller";
};

// Counter-based uniform in [0, 1) and standard normal draw.
double uniform_stream(std::uint64_t seed, std::uint64_t counter);
double normal_stream(std::uint64_t seed, std::uint64_t counter);

// N x K record of the channel quadratures X(theta_k), drawn from the exact
// multivariate normal of joint_quadrature_stats (means + cross covariance).
Eigen::MatrixXd sample_quadratures(const GaussianState& state,
                                   const std::vector<HomodyneChannel>& channels,
                                   std::int64_t n_samples, std::uint64_t seed);

// Linear estimator phi_hat = (sum_k w_k x_k) / slope per sample row.
Eigen::VectorXd estimate_phase(const Eigen::MatrixXd& samples,
                               const std::vector<HomodyneChannel>& channels,
                               double slope);

// Build the scheme at zero phases, sample, and compare Var(phi_hat) with the
// closed-form LOD.  Supports the four two-phase schemes.
McResult mc_lod(Scheme scheme, const InterferometerParams& params,
                const McConfig& config);

// Same for the M-phase entangled network (lossless).
McResult mc_lod_multi_entangled(int m_phases, double gain, double alpha_sq,
                                const McConfig& config);

// Lower-triangular factor L with C = L L^T, tolerating semidefinite C.
Eigen::MatrixXd psd_cholesky(const Eigen::MatrixXd& c);

}  // namespace tsu11
