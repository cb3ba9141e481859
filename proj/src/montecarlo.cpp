#include "tsu11/montecarlo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tsu11 {

namespace {

std::uint64_t avalanche(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

std::uint64_t premix(std::uint64_t seed) { return avalanche(seed ^ 0xD6E8FEB86659FD93ULL); }

}  // namespace

double uniform_stream(std::uint64_t seed, std::uint64_t counter) {
    const std::uint64_t word =
        avalanche(premix(seed) + (counter + 1) * 0x9E3779B97F4A7C15ULL);
    return double(word >> 11) * 0x1.0p-53;
}

double normal_stream(std::uint64_t seed, std::uint64_t counter) {
    // Box-Muller, cosine branch; u1 shifted into (0, 1] so the log is finite.
    const double u1 = uniform_stream(seed, 2 * counter) + 0x1.0p-53;
    const double u2 = uniform_stream(seed, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::MatrixXd psd_cholesky(const Eigen::MatrixXd& c) {
    const auto k = c.rows();
    if (c.cols() != k) throw std::invalid_argument("psd_cholesky: matrix not square");
    const double scale = std::max(1.0, c.diagonal().cwiseAbs().maxCoeff());
    const double tol = 1e-12 * scale;
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index j = 0; j < k; ++j) {
        double pivot = c(j, j) - l.row(j).head(j).squaredNorm();
        if (pivot < -tol)
            throw std::domain_error("psd_cholesky: covariance not positive semidefinite");
        if (pivot <= tol) continue;  // degenerate direction, column stays zero
        pivot = std::sqrt(pivot);
        l(j, j) = pivot;
        for (Eigen::Index i = j + 1; i < k; ++i)
            l(i, j) = (c(i, j) - l.row(i).head(j).dot(l.row(j).head(j))) / pivot;
    }
    return l;
}

Eigen::MatrixXd sample_quadratures(const GaussianState& state,
                                   const std::vector<HomodyneChannel>& channels,
                                   std::int64_t n_samples, std::uint64_t seed) {
    if (n_samples < 1) throw std::invalid_argument("sample_quadratures: need samples");
    const QuadratureStats stats = joint_quadrature_stats(state, channels);
    const int k = static_cast<int>(channels.size());
    const Eigen::MatrixXd l = psd_cholesky(stats.cross_covariance);

    Eigen::MatrixXd out(n_samples, k);
    Eigen::VectorXd z(k);
    for (std::int64_t i = 0; i < n_samples; ++i) {
        const std::uint64_t base = std::uint64_t(i) * std::uint64_t(k);
        for (int j = 0; j < k; ++j) z(j) = normal_stream(seed, base + j);
        out.row(i) = (stats.channel_means + l * z).transpose();
    }
    return out;
}

Eigen::VectorXd estimate_phase(const Eigen::MatrixXd& samples,
                               const std::vector<HomodyneChannel>& channels,
                               double slope) {
    if (slope == 0.0) throw std::domain_error("estimate_phase: zero slope");
    if (samples.cols() != static_cast<Eigen::Index>(channels.size()))
        throw std::invalid_argument("estimate_phase: channel count mismatch");
    Eigen::VectorXd w(samples.cols());
    for (Eigen::Index j = 0; j < w.size(); ++j) w(j) = channels[j].weight;
    return (samples * w) / slope;
}

namespace {

McResult finish(const Eigen::VectorXd& phi_hat, double analytic,
                std::int64_t n_samples) {
    const double mean = phi_hat.mean();
    const double var =
        (phi_hat.array() - mean).square().sum() / double(n_samples - 1);
    const double rel = std::sqrt(2.0 / double(n_samples - 1));
    McResult r;
    r.empirical_lod = var;
    r.standard_error = var * rel;
    r.analytic_lod = analytic;
    r.z_score = (var - analytic) / (analytic * rel);
    return r;
}

}  // namespace

McResult mc_lod(Scheme scheme, const InterferometerParams& params,
                const McConfig& config) {
    if (config.samples < 1000)
        throw std::invalid_argument("mc_lod: need at least 1000 samples");
    InterferometerParams p = params;
    p.phi1 = 0.0;
    p.phi2 = 0.0;

    GaussianState state;
    double analytic = 0.0;
    switch (scheme) {
        case Scheme::tsu_distributed:
            state = build_tsu_distributed(p);
            analytic = lod_tsu_distributed(p).delta_phi_sq;
            break;
        case Scheme::tsu_separable:
            state = build_tsu_separable(p);
            analytic = lod_tsu_separable(p).delta_phi_sq;
            break;
        case Scheme::classical_distributed:
            state = build_classical_distributed(p);
            analytic = lod_classical_distributed(p).delta_phi_sq;
            break;
        case Scheme::classical_separable:
            state = build_classical_separable(p);
            analytic = lod_classical_separable(p).delta_phi_sq;
            break;
        default:
            throw std::invalid_argument("mc_lod: not a two-phase scheme");
    }

    const auto channels = two_phase_channels(scheme, p.g);
    const Eigen::MatrixXd samples =
        sample_quadratures(state, channels, config.samples, config.seed);
    const Eigen::VectorXd phi_hat =
        estimate_phase(samples, channels, two_phase_slope(p));
    return finish(phi_hat, analytic, config.samples);
}

McResult mc_lod_multi_entangled(int m_phases, double gain, double alpha_sq,
                                const McConfig& config) {
    if (config.samples < 1000)
        throw std::invalid_argument("mc_lod_multi_entangled: need at least 1000 samples");
    const std::vector<double> phases(m_phases, 0.0);
    const MultiEntangledNetwork net =
        build_multi_entangled(m_phases, gain, alpha_sq, phases);
    const auto channels = multi_entangled_channels(net);
    const Eigen::MatrixXd samples =
        sample_quadratures(net.state, channels, config.samples, config.seed);
    const Eigen::VectorXd phi_hat = estimate_phase(
        samples, channels, multi_entangled_slope(m_phases, gain, alpha_sq));
    return finish(phi_hat, lod_multi_entangled_raw(gain, alpha_sq), config.samples);
}

}  // namespace tsu11
