#pragma once

#include <complex>
#include <Eigen/Dense>

// Gaussian states of n bosonic modes in ladder ordering.
//
// Operator vector A = (a_1..a_n, a_1^dag..a_n^dag).  A state is the pair
//   d_i      = <A_i>                      (conjugate symmetry d[n+i] = conj(d[i]))
//   sigma_ij = <A_i A_j^dag + A_j^dag A_i> - 2 <A_i><A_j^dag>
// so the vacuum has d = 0, sigma = I.  Linear-optical elements act as
// Bogoliubov matrices S = [[U, V], [conj(V), conj(U)]] with
// d -> S d, sigma -> S sigma S^dag.

namespace tsu11 {

using cxd = std::complex<double>;

struct GaussianState {
    int n_modes = 0;
    Eigen::VectorXcd d;      // length 2n
    Eigen::MatrixXcd sigma;  // 2n x 2n, Hermitian

    int dim() const { return 2 * n_modes; }
};

// Bogoliubov transform on n modes.  matrix is 2n x 2n in the block form
// [[U, V], [conj(V), conj(U)]] with U U^dag - V V^dag = I and U V^T symmetric.
struct SymplecticTransform {
    int n_modes = 0;
    Eigen::MatrixXcd matrix;

    static SymplecticTransform identity(int n_modes);
    static SymplecticTransform from_blocks(const Eigen::MatrixXcd& u,
                                           const Eigen::MatrixXcd& v);
    // a' = sqrt(G) a + sqrt(G-1) b^dag,  b' = sqrt(G) b + sqrt(G-1) a^dag
    static SymplecticTransform two_mode_squeezer(int n_modes, int mode_a, int mode_b,
                                                 double gain);
    // a -> exp(-i phi) a
    static SymplecticTransform phase_rotation(int n_modes, int mode, double phi);
    // a' =  sqrt(t) a + e^{i chi} sqrt(1-t) b
    // b' = -e^{-i chi} sqrt(1-t) a + sqrt(t) b
    static SymplecticTransform beam_splitter(int n_modes, int mode_a, int mode_b,
                                             double transmissivity, double phase = 0.0);

    SymplecticTransform then(const SymplecticTransform& second) const;
    GaussianState apply(const GaussianState& state) const;

    Eigen::MatrixXcd u_block() const;
    Eigen::MatrixXcd v_block() const;
    // max-norm violation of the Bogoliubov conditions; 0 for a valid transform
    double bogoliubov_defect() const;
};

// n-mode vacuum: d = 0, sigma = I.
GaussianState vacuum(int n_modes);

// Coherent displacement of one mode; sigma unchanged.
GaussianState displace(const GaussianState& state, int mode, cxd amplitude);

// Two-mode squeezer with gain G >= 1 (r = acosh(sqrt(G))).
GaussianState two_mode_squeeze(const GaussianState& state, int mode_a, int mode_b,
                               double gain);

// Phase shift a -> exp(-i phi) a.
GaussianState phase_shift(const GaussianState& state, int mode, double phi);

// Two-mode beam splitter, transmissivity t in [0, 1].
GaussianState beam_splitter(const GaussianState& state, int mode_a, int mode_b,
                            double transmissivity, double phase = 0.0);

// Pure loss channel: mix the mode with a vacuum ancilla at transmissivity eta
// and trace the ancilla out.  eta = 1 is the identity, eta = 0 resets to vacuum.
GaussianState loss(const GaussianState& state, int mode, double eta);

// Split one mode into d_ways outputs of a balanced network: every output
// carries amplitude 1/sqrt(d_ways) of the input (uniform, real, positive).
// Adds d_ways - 1 vacuum modes; outputs sit at [mode, n, n+1, .., n+d_ways-2]
// where n is the mode count before the split.
GaussianState balanced_split(const GaussianState& state, int mode, int d_ways);

// Append k vacuum modes at indices n..n+k-1.
GaussianState attach_vacuum(const GaussianState& state, int k);

// Keep only the listed modes (order preserved); the rest are traced out.
GaussianState keep_modes(const GaussianState& state, const std::vector<int>& modes);

// <a^dag a> of one mode.
double mean_photons(const GaussianState& state, int mode);

// Diagnostics used by the test suite.
double hermiticity_defect(const GaussianState& state);   // max |sigma - sigma^dag|
double conjugate_symmetry_defect(const GaussianState& state);  // max |d[n+i] - conj(d[i])|

}  // namespace tsu11
