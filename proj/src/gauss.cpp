#include "tsu11/gauss.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsu11 {

namespace {

void check_mode(const GaussianState& state, int mode, const char* what) {
    if (mode < 0 || mode >= state.n_modes)
        throw std::invalid_argument(std::string(what) + ": mode index " +
                                    std::to_string(mode) + " out of range for " +
                                    std::to_string(state.n_modes) + " modes");
}

void check_distinct(int a, int b, const char* what) {
    if (a == b)
        throw std::invalid_argument(std::string(what) + ": the two modes must differ");
}

}  // namespace

GaussianState vacuum(int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("vacuum: n_modes must be >= 1");
    GaussianState s;
    s.n_modes = n_modes;
    s.d = Eigen::VectorXcd::Zero(2 * n_modes);
    s.sigma = Eigen::MatrixXcd::Identity(2 * n_modes, 2 * n_modes);
    return s;
}

SymplecticTransform SymplecticTransform::identity(int n_modes) {
    SymplecticTransform t;
    t.n_modes = n_modes;
    t.matrix = Eigen::MatrixXcd::Identity(2 * n_modes, 2 * n_modes);
    return t;
}

SymplecticTransform SymplecticTransform::from_blocks(const Eigen::MatrixXcd& u,
                                                     const Eigen::MatrixXcd& v) {
    const auto n = u.rows();
    if (u.cols() != n || v.rows() != n || v.cols() != n)
        throw std::invalid_argument("from_blocks: U and V must be square and same size");
    SymplecticTransform t;
    t.n_modes = static_cast<int>(n);
    t.matrix.resize(2 * n, 2 * n);
    t.matrix.topLeftCorner(n, n) = u;
    t.matrix.topRightCorner(n, n) = v;
    t.matrix.bottomLeftCorner(n, n) = v.conjugate();
    t.matrix.bottomRightCorner(n, n) = u.conjugate();
    return t;
}

Eigen::MatrixXcd SymplecticTransform::u_block() const {
    return matrix.topLeftCorner(n_modes, n_modes);
}

Eigen::MatrixXcd SymplecticTransform::v_block() const {
    return matrix.topRightCorner(n_modes, n_modes);
}

double SymplecticTransform::bogoliubov_defect() const {
    const Eigen::MatrixXcd u = u_block();
    const Eigen::MatrixXcd v = v_block();
    const auto n = u.rows();
    const double unit = (u * u.adjoint() - v * v.adjoint() -
                         Eigen::MatrixXcd::Identity(n, n))
                            .cwiseAbs()
                            .maxCoeff();
    const Eigen::MatrixXcd uv = u * v.transpose();
    const double sym = (uv - uv.transpose()).cwiseAbs().maxCoeff();
    return std::max(unit, sym);
}

SymplecticTransform SymplecticTransform::two_mode_squeezer(int n_modes, int mode_a,
                                                           int mode_b, double gain) {
    if (gain < 1.0)
        throw std::invalid_argument("two_mode_squeezer: gain must be >= 1");
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n_modes, n_modes);
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(n_modes, n_modes);
    const double c = std::sqrt(gain);
    const double s = std::sqrt(gain - 1.0);
    u(mode_a, mode_a) = c;
    u(mode_b, mode_b) = c;
    v(mode_a, mode_b) = s;
    v(mode_b, mode_a) = s;
    return from_blocks(u, v);
}

SymplecticTransform SymplecticTransform::phase_rotation(int n_modes, int mode,
                                                        double phi) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n_modes, n_modes);
    u(mode, mode) = std::exp(cxd(0.0, -phi));
    return from_blocks(u, Eigen::MatrixXcd::Zero(n_modes, n_modes));
}

SymplecticTransform SymplecticTransform::beam_splitter(int n_modes, int mode_a,
                                                       int mode_b, double transmissivity,
                                                       double phase) {
    if (transmissivity < 0.0 || transmissivity > 1.0)
        throw std::invalid_argument("beam_splitter: transmissivity must lie in [0, 1]");
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n_modes, n_modes);
    const double ct = std::sqrt(transmissivity);
    const double st = std::sqrt(1.0 - transmissivity);
    const cxd ph = std::exp(cxd(0.0, phase));
    u(mode_a, mode_a) = ct;
    u(mode_a, mode_b) = ph * st;
    u(mode_b, mode_a) = -std::conj(ph) * st;
    u(mode_b, mode_b) = ct;
    return from_blocks(u, Eigen::MatrixXcd::Zero(n_modes, n_modes));
}

SymplecticTransform SymplecticTransform::then(const SymplecticTransform& second) const {
    if (second.n_modes != n_modes)
        throw std::invalid_argument("then: mode counts differ");
    SymplecticTransform t;
    t.n_modes = n_modes;
    t.matrix = second.matrix * matrix;
    return t;
}

GaussianState SymplecticTransform::apply(const GaussianState& state) const {
    if (state.n_modes != n_modes)
        throw std::invalid_argument("apply: transform and state mode counts differ");
    GaussianState out;
    out.n_modes = n_modes;
    out.d = matrix * state.d;
    out.sigma = matrix * state.sigma * matrix.adjoint();
    out.sigma = 0.5 * (out.sigma + out.sigma.adjoint().eval());  // keep exactly Hermitian
    return out;
}

GaussianState displace(const GaussianState& state, int mode, cxd amplitude) {
    check_mode(state, mode, "displace");
    GaussianState out = state;
    out.d(mode) += amplitude;
    out.d(mode + state.n_modes) += std::conj(amplitude);
    return out;
}

GaussianState two_mode_squeeze(const GaussianState& state, int mode_a, int mode_b,
                               double gain) {
    check_mode(state, mode_a, "two_mode_squeeze");
    check_mode(state, mode_b, "two_mode_squeeze");
    check_distinct(mode_a, mode_b, "two_mode_squeeze");
    return SymplecticTransform::two_mode_squeezer(state.n_modes, mode_a, mode_b, gain)
        .apply(state);
}

GaussianState phase_shift(const GaussianState& state, int mode, double phi) {
    check_mode(state, mode, "phase_shift");
    return SymplecticTransform::phase_rotation(state.n_modes, mode, phi).apply(state);
}

GaussianState beam_splitter(const GaussianState& state, int mode_a, int mode_b,
                            double transmissivity, double phase) {
    check_mode(state, mode_a, "beam_splitter");
    check_mode(state, mode_b, "beam_splitter");
    check_distinct(mode_a, mode_b, "beam_splitter");
    return SymplecticTransform::beam_splitter(state.n_modes, mode_a, mode_b,
                                              transmissivity, phase)
        .apply(state);
}

GaussianState attach_vacuum(const GaussianState& state, int k) {
    if (k < 0) throw std::invalid_argument("attach_vacuum: k must be >= 0");
    if (k == 0) return state;
    const int n = state.n_modes;
    const int m = n + k;
    GaussianState out;
    out.n_modes = m;
    out.d = Eigen::VectorXcd::Zero(2 * m);
    out.sigma = Eigen::MatrixXcd::Identity(2 * m, 2 * m);
    // old index i maps to i (annihilation part) and n+i -> m+i (creation part)
    std::vector<int> map(2 * n);
    for (int i = 0; i < n; ++i) {
        map[i] = i;
        map[n + i] = m + i;
    }
    for (int i = 0; i < 2 * n; ++i) {
        out.d(map[i]) = state.d(i);
        for (int j = 0; j < 2 * n; ++j) out.sigma(map[i], map[j]) = state.sigma(i, j);
    }
    return out;
}

GaussianState keep_modes(const GaussianState& state, const std::vector<int>& modes) {
    if (modes.empty()) throw std::invalid_argument("keep_modes: nothing kept");
    for (int m : modes) check_mode(state, m, "keep_modes");
    const int n = state.n_modes;
    const int m = static_cast<int>(modes.size());
    std::vector<int> src(2 * m);
    for (int i = 0; i < m; ++i) {
        src[i] = modes[i];
        src[m + i] = n + modes[i];
    }
    GaussianState out;
    out.n_modes = m;
    out.d.resize(2 * m);
    out.sigma.resize(2 * m, 2 * m);
    for (int i = 0; i < 2 * m; ++i) {
        out.d(i) = state.d(src[i]);
        for (int j = 0; j < 2 * m; ++j) out.sigma(i, j) = state.sigma(src[i], src[j]);
    }
    return out;
}

GaussianState loss(const GaussianState& state, int mode, double eta) {
    check_mode(state, mode, "loss");
    if (eta < 0.0 || eta > 1.0)
        throw std::invalid_argument("loss: eta must lie in [0, 1]");
    GaussianState ext = attach_vacuum(state, 1);
    ext = beam_splitter(ext, mode, state.n_modes, eta);
    std::vector<int> keep(state.n_modes);
    for (int i = 0; i < state.n_modes; ++i) keep[i] = i;
    return keep_modes(ext, keep);
}

GaussianState balanced_split(const GaussianState& state, int mode, int d_ways) {
    check_mode(state, mode, "balanced_split");
    if (d_ways < 1) throw std::invalid_argument("balanced_split: d_ways must be >= 1");
    if (d_ways == 1) return state;
    const int n = state.n_modes;
    GaussianState ext = attach_vacuum(state, d_ways - 1);

    // Householder reflection with first column (1/sqrt(d), .., 1/sqrt(d)):
    // real orthogonal, so the completion columns are automatically orthonormal.
    Eigen::MatrixXd w = Eigen::MatrixXd::Identity(d_ways, d_ways);
    Eigen::VectorXd u = Eigen::VectorXd::Constant(d_ways, 1.0 / std::sqrt(double(d_ways)));
    u(0) -= 1.0;
    w -= (2.0 / u.squaredNorm()) * (u * u.transpose());

    std::vector<int> sub(d_ways);
    sub[0] = mode;
    for (int i = 1; i < d_ways; ++i) sub[i] = n + i - 1;

    Eigen::MatrixXcd ublock = Eigen::MatrixXcd::Identity(ext.n_modes, ext.n_modes);
    for (int i = 0; i < d_ways; ++i)
        for (int j = 0; j < d_ways; ++j) ublock(sub[i], sub[j]) = w(i, j);
    return SymplecticTransform::from_blocks(
               ublock, Eigen::MatrixXcd::Zero(ext.n_modes, ext.n_modes))
        .apply(ext);
}

double mean_photons(const GaussianState& state, int mode) {
    check_mode(state, mode, "mean_photons");
    return 0.5 * (std::real(state.sigma(mode, mode)) - 1.0) + std::norm(state.d(mode));
}

double hermiticity_defect(const GaussianState& state) {
    return (state.sigma - state.sigma.adjoint()).cwiseAbs().maxCoeff();
}

double conjugate_symmetry_defect(const GaussianState& state) {
    double worst = 0.0;
    for (int i = 0; i < state.n_modes; ++i)
        worst = std::max(worst,
                         std::abs(state.d(state.n_modes + i) - std::conj(state.d(i))));
    return worst;
}

}  // namespace tsu11
