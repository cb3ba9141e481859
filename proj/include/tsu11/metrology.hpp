#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "tsu11/gauss.hpp"

// Homodyne estimators and quantum bounds on top of the Gaussian layer.
//
// Quadrature convention: X(theta) = e^{-i theta} a^dag + e^{i theta} a,
// so the vacuum has Var X = 1 and the shot-noise level of a joint readout
// X_+ = sum_k w_k X_k over coherent inputs is sum_k w_k^2.

namespace tsu11 {

struct HomodyneChannel {
    int mode = 0;
    double theta = 0.0;   // local-oscillator phase
    double weight = 1.0;  // classical gain applied before summing
};

struct QuadratureStats {
    double mean = 0.0;      // <X_+> = sum_k w_k <X(theta_k)>
    double variance = 0.0;  // Var X_+ = w^T C w
    Eigen::VectorXd channel_means;          // unweighted <X(theta_k)>
    Eigen::MatrixXd cross_covariance;       // unweighted Cov(X_j, X_k)
};

// Exact first and second moments of the joint quadrature readout.
// Channels must address distinct modes.
QuadratureStats joint_quadrature_stats(const GaussianState& state,
                                       const std::vector<HomodyneChannel>& channels);

// Linearized limit of detection Var(X)/slope^2 for slope = d<X>/dphi.
double lod(double slope, double variance);

struct FisherMatrix {
    Eigen::MatrixXd entries;  // m x m, symmetric
    int dim() const { return static_cast<int>(entries.rows()); }
};

// Bright-beam quantum Fisher information F_ij = 2 Re[ (d_i d)^dag sigma^{-1} (d_j d) ]
// with displacement derivatives taken by central differences at the given phases.
// The covariance is evaluated at the base phases and must be positive definite.
FisherMatrix qfi_matrix(
    const std::function<GaussianState(const std::vector<double>&)>& state_at,
    const std::vector<double>& phases, double step = 1e-6);

// Cramer-Rao bound beta^T F^{-1} beta for the combination sum_k beta_k phi_k.
// Weights must satisfy sum |beta_k| = 1.
double qcrb(const FisherMatrix& fisher, const Eigen::VectorXd& beta);

// Signal-to-noise ratio slope^2 delta_phi_sq / variance of a phase step.
double snr(double slope, double variance, double delta_phi_sq);

// Remove the noise floor from a measured SNR reading:
// 10 log10( 10^((measured - noise)/10) - 1 ).  Requires measured > noise.
double snr_correct_db(double measured_dbm, double noise_dbm);

double db(double ratio);   // 10 log10(ratio), ratio > 0
double undb(double value); // 10^(value/10)

}  // namespace tsu11
