#include "tsu11/metrology.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace tsu11 {

QuadratureStats joint_quadrature_stats(const GaussianState& state,
                                       const std::vector<HomodyneChannel>& channels) {
    const int n = state.n_modes;
    const int k = static_cast<int>(channels.size());
    if (k == 0) throw std::invalid_argument("joint_quadrature_stats: no channels");
    std::set<int> seen;
    for (const auto& ch : channels) {
        if (ch.mode < 0 || ch.mode >= n)
            throw std::invalid_argument("joint_quadrature_stats: channel mode out of range");
        if (!seen.insert(ch.mode).second)
            throw std::invalid_argument("joint_quadrature_stats: duplicate channel mode");
    }

    QuadratureStats out;
    out.channel_means.resize(k);
    out.cross_covariance.resize(k, k);

    std::vector<cxd> c(k);
    for (int j = 0; j < k; ++j) {
        c[j] = std::exp(cxd(0.0, channels[j].theta));
        out.channel_means(j) = 2.0 * std::real(c[j] * state.d(channels[j].mode));
    }
    // Cov(X_j, X_k) assembled from sigma; the imaginary part cancels by
    // Hermiticity and is dropped.
    for (int j = 0; j < k; ++j) {
        for (int l = j; l < k; ++l) {
            const int mj = channels[j].mode;
            const int ml = channels[l].mode;
            const cxd cj = c[j];
            const cxd cl = c[l];
            const cxd val = cj * cl * state.sigma(mj, n + ml) +
                            cj * std::conj(cl) * state.sigma(mj, ml) +
                            std::conj(cj) * cl * state.sigma(n + mj, n + ml) +
                            std::conj(cj) * std::conj(cl) * state.sigma(n + mj, ml);
            out.cross_covariance(j, l) = 0.5 * std::real(val);
            out.cross_covariance(l, j) = out.cross_covariance(j, l);
        }
    }

    Eigen::VectorXd w(k);
    for (int j = 0; j < k; ++j) w(j) = channels[j].weight;
    out.mean = w.dot(out.channel_means);
    out.variance = w.dot(out.cross_covariance * w);
    return out;
}

double lod(double slope, double variance) {
    if (slope == 0.0)
        throw std::domain_error("lod: zero slope, estimator is singular");
    if (variance < 0.0)
        throw std::invalid_argument("lod: negative variance");
    return variance / (slope * slope);
}

FisherMatrix qfi_matrix(
    const std::function<GaussianState(const std::vector<double>&)>& state_at,
    const std::vector<double>& phases, double step) {
    if (step <= 0.0) throw std::invalid_argument("qfi_matrix: step must be > 0");
    const int m = static_cast<int>(phases.size());
    if (m == 0) throw std::invalid_argument("qfi_matrix: no phases");

    const GaussianState base = state_at(phases);
    Eigen::LLT<Eigen::MatrixXcd> llt(base.sigma);
    if (llt.info() != Eigen::Success)
        throw std::domain_error("qfi_matrix: covariance is singular");

    const int dim = base.dim();
    Eigen::MatrixXcd deriv(dim, m);
    for (int i = 0; i < m; ++i) {
        std::vector<double> hi = phases, lo = phases;
        hi[i] += step;
        lo[i] -= step;
        deriv.col(i) = (state_at(hi).d - state_at(lo).d) / (2.0 * step);
    }

    const Eigen::MatrixXcd solved = llt.solve(deriv);
    FisherMatrix f;
    f.entries = 2.0 * (deriv.adjoint() * solved).real();
    f.entries = 0.5 * (f.entries + f.entries.transpose().eval());
    return f;
}

double qcrb(const FisherMatrix& fisher, const Eigen::VectorXd& beta) {
    const int m = fisher.dim();
    if (beta.size() != m)
        throw std::invalid_argument("qcrb: beta size does not match Fisher matrix");
    if (std::abs(beta.cwiseAbs().sum() - 1.0) > 1e-9)
        throw std::invalid_argument("qcrb: weights must satisfy sum |beta_k| = 1");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(fisher.entries);
    if (!lu.isInvertible())
        throw std::domain_error("qcrb: Fisher matrix is singular");
    return beta.dot(lu.solve(beta));
}

double snr(double slope, double variance, double delta_phi_sq) {
    if (variance <= 0.0)
        throw std::invalid_argument("snr: variance must be > 0");
    if (delta_phi_sq < 0.0)
        throw std::invalid_argument("snr: delta_phi_sq must be >= 0");
    return slope * slope * delta_phi_sq / variance;
}

double snr_correct_db(double measured_dbm, double noise_dbm) {
    if (measured_dbm <= noise_dbm)
        throw std::invalid_argument(
            "snr_correct_db: measured level must exceed the noise floor");
    return db(undb(measured_dbm - noise_dbm) - 1.0);
}

double db(double ratio) {
    if (ratio <= 0.0) throw std::invalid_argument("db: ratio must be > 0");
    return 10.0 * std::log10(ratio);
}

double undb(double value) { return std::pow(10.0, value / 10.0); }

}  // namespace tsu11
