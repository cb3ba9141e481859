#include "tsu11/schemes.hpp"

#include <cmath>
#include <stdexcept>

namespace tsu11 {

namespace {

double sq(double x) { return x * x; }

void check_gain(double gain) {
    if (!(gain >= 1.0)) throw std::invalid_argument("gain must be >= 1");
}

void check_multi(int m_phases, double n_per_phase) {
    if (m_phases < 1) throw std::invalid_argument("M must be >= 1");
    if (!(n_per_phase > 0.0)) throw std::invalid_argument("n must be > 0");
}

void check_multi_even(int m_phases, double n_per_phase) {
    check_multi(m_phases, n_per_phase);
    if (m_phases % 2 != 0)
        throw std::invalid_argument("entangled scheme requires even M");
}

LodResult two_phase_result(Scheme s, const InterferometerParams& p, double value) {
    LodResult r;
    r.scheme = s;
    r.delta_phi_sq = value;
    r.bright_beam = p.bright_beam();
    r.two_phase = p;
    return r;
}

LodResult multi_result(Scheme s, int m, double n, double value) {
    LodResult r;
    r.scheme = s;
    r.delta_phi_sq = value;
    r.multi.m_phases = m;
    r.multi.n_per_phase = n;
    return r;
}

}  // namespace

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::tsu_distributed: return "tsu-dis";
        case Scheme::tsu_separable: return "tsu-sep";
        case Scheme::classical_distributed: return "cla-dis";
        case Scheme::classical_separable: return "cla-sep";
        case Scheme::multi_classical: return "multi-cla";
        case Scheme::multi_separable: return "multi-sep";
        case Scheme::multi_entangled: return "multi-ent";
    }
    return "?";
}

std::optional<Scheme> scheme_from_name(const std::string& name) {
    for (Scheme s : {Scheme::tsu_distributed, Scheme::tsu_separable,
                     Scheme::classical_distributed, Scheme::classical_separable,
                     Scheme::multi_classical, Scheme::multi_separable,
                     Scheme::multi_entangled})
        if (name == scheme_name(s)) return s;
    return std::nullopt;
}

void InterferometerParams::validate() const {
    check_gain(gain);
    if (alpha_sq < 0.0) throw std::invalid_argument("alpha_sq must be >= 0");
    if (!(eta > 0.0) || eta > 1.0)
        throw std::invalid_argument("eta must lie in (0, 1]");
    if (!(g > 0.0)) throw std::invalid_argument("g must be > 0");
}

BetaWeights beta_weights(double gain, double g) {
    check_gain(gain);
    if (!(g > 0.0)) throw std::invalid_argument("beta_weights: g must be > 0");
    const double a = std::sqrt(gain);
    const double b = g * std::sqrt(gain - 1.0);
    return {a / (a + b), b / (a + b)};
}

double two_phase_slope(const InterferometerParams& p) {
    p.validate();
    return 2.0 * std::sqrt(p.alpha_sq * p.eta) *
           (std::sqrt(p.gain) + p.g * std::sqrt(p.gain - 1.0));
}

double two_phase_variance(const InterferometerParams& p) {
    p.validate();
    return (sq(p.g) + 1.0) * (1.0 - 2.0 * p.eta + 2.0 * p.eta * p.gain) -
           4.0 * p.g * p.eta * std::sqrt(p.gain * (p.gain - 1.0)) *
               std::cos(p.phi1 + p.phi2);
}

LodResult lod_tsu_distributed(const InterferometerParams& p) {
    p.validate();
    if (p.alpha_sq == 0.0)
        throw std::invalid_argument("lod_tsu_distributed: alpha_sq must be > 0");
    const double num = (sq(p.g) + 1.0) * (1.0 - 2.0 * p.eta + 2.0 * p.eta * p.gain) -
                       4.0 * p.g * p.eta * std::sqrt(p.gain * (p.gain - 1.0));
    const double den = 4.0 * p.alpha_sq * p.eta *
                       sq(std::sqrt(p.gain) + p.g * std::sqrt(p.gain - 1.0));
    return two_phase_result(Scheme::tsu_distributed, p, num / den);
}

LodResult lod_tsu_separable(const InterferometerParams& p) {
    LodResult r = lod_tsu_distributed(p);
    r.scheme = Scheme::tsu_separable;
    r.delta_phi_sq *= 2.0;
    return r;
}

LodResult lod_classical_distributed(const InterferometerParams& p) {
    p.validate();
    if (p.alpha_sq == 0.0)
        throw std::invalid_argument("lod_classical_distributed: alpha_sq must be > 0");
    const double den = 4.0 * p.alpha_sq * p.eta *
                       sq(std::sqrt(p.gain) + p.g * std::sqrt(p.gain - 1.0));
    return two_phase_result(Scheme::classical_distributed, p, (sq(p.g) + 1.0) / den);
}

LodResult lod_classical_separable(const InterferometerParams& p) {
    LodResult r = lod_classical_distributed(p);
    r.scheme = Scheme::classical_separable;
    r.delta_phi_sq *= 2.0;
    return r;
}

double qcrb_tsu(const InterferometerParams& p) {
    p.validate();
    if (p.alpha_sq == 0.0) throw std::invalid_argument("qcrb_tsu: alpha_sq must be > 0");
    const double num = 1.0 - 2.0 * p.eta + 2.0 * p.eta * p.gain -
                       2.0 * p.eta * std::sqrt(p.gain * (p.gain - 1.0));
    const double den =
        2.0 * p.alpha_sq * p.eta * sq(std::sqrt(p.gain) + std::sqrt(p.gain - 1.0));
    return num / den;
}

std::optional<std::pair<double, double>> advantage_g_window(double gain, double eta) {
    if (!(eta > 0.0) || eta > 1.0)
        throw std::invalid_argument("advantage_g_window: eta must lie in (0, 1]");
    if (!(gain > 1.0)) return std::nullopt;
    // equality of the two LODs reduces to (G-1) g^2 - 2 sqrt(G(G-1)) g + (G-1) = 0;
    // eta cancels because the coherent variance carries no loss dependence.
    const double root = std::sqrt(gain - 1.0);
    return std::make_pair((std::sqrt(gain) - 1.0) / root, (std::sqrt(gain) + 1.0) / root);
}

double n_total(double gain, double alpha_sq) {
    check_gain(gain);
    if (alpha_sq < 0.0) throw std::invalid_argument("n_total: alpha_sq must be >= 0");
    return 2.0 * (gain - 1.0) + 4.0 * gain * alpha_sq +
           2.0 * alpha_sq * (-1.0 + 2.0 * std::sqrt(gain * (gain - 1.0)));
}

LodResult lod_multi_classical(int m_phases, double n_per_phase) {
    check_multi(m_phases, n_per_phase);
    return multi_result(Scheme::multi_classical, m_phases, n_per_phase,
                        1.0 / (4.0 * m_phases * n_per_phase));
}

LodResult lod_multi_separable(int m_phases, double n_per_phase) {
    check_multi(m_phases, n_per_phase);
    return multi_result(Scheme::multi_separable, m_phases, n_per_phase,
                        1.0 / (4.0 * m_phases * n_per_phase * (n_per_phase + 1.0)));
}

double lod_multi_entangled_raw(double gain, double alpha_sq) {
    check_gain(gain);
    if (!(alpha_sq > 0.0))
        throw std::invalid_argument("lod_multi_entangled_raw: alpha_sq must be > 0");
    const double num = -1.0 + 2.0 * gain - 2.0 * std::sqrt(gain * (gain - 1.0));
    return num / (8.0 * alpha_sq * sq(std::sqrt(gain) + std::sqrt(gain - 1.0)));
}

LodResult lod_multi_entangled_optimal(int m_phases, double n_per_phase) {
    check_multi_even(m_phases, n_per_phase);
    const double mn = m_phases * n_per_phase;
    return multi_result(Scheme::multi_entangled, m_phases, n_per_phase,
                        1.0 / (2.0 * mn * (mn + 2.0)));
}

EntangledOptimum optimize_entangled(int m_phases, double n_per_phase,
                                    const OptimizerConfig& config) {
    check_multi_even(m_phases, n_per_phase);
    const double budget = m_phases * n_per_phase;  // n_total at the optimum
    if (!(budget > 0.0))
        throw std::domain_error("optimize_entangled: infeasible photon budget");

    // a^2(G) from the budget constraint; maximize the reciprocal objective
    // h(G) = (budget - 2(G-1)) * (2G - 1 + 2 sqrt(G(G-1))), so lod = 1/(4 h).
    const auto stretch = [](double gain) {
        return 2.0 * gain - 1.0 + 2.0 * std::sqrt(gain * (gain - 1.0));
    };
    const auto h = [&](double gain) {
        return (budget - 2.0 * (gain - 1.0)) * stretch(gain);
    };

    double lo = 1.0;
    double hi = 1.0 + 0.5 * budget;  // a^2 >= 0 boundary
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = h(x1);
    double f2 = h(x2);
    for (int it = 0; it < config.max_iterations && (hi - lo) > config.g_tolerance; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = h(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = h(x1);
        }
    }

    EntangledOptimum opt;
    opt.gain = 0.5 * (lo + hi);
    opt.alpha_sq = (budget - 2.0 * (opt.gain - 1.0)) / (2.0 * stretch(opt.gain));
    if (!(opt.alpha_sq > 0.0))
        throw std::domain_error("optimize_entangled: infeasible photon budget");
    opt.delta_phi_sq = lod_multi_entangled_raw(opt.gain, opt.alpha_sq);
    return opt;
}

double eta_for_noise_reduction_db(double gain, double g, double target_db) {
    check_gain(gain);
    if (!(g > 0.0)) throw std::invalid_argument("g must be > 0");
    if (!(target_db > 0.0)) throw std::invalid_argument("target_db must be > 0");
    const double benchmark = sq(g) + 1.0;
    const auto ratio = [&](double eta) {
        InterferometerParams p;
        p.gain = gain;
        p.g = g;
        p.eta = eta;
        return two_phase_variance(p) / benchmark;
    };
    const double target = undb(-target_db);
    if (ratio(1.0) > target)
        throw std::domain_error(
            "eta_for_noise_reduction_db: requested reduction unreachable at this gain");
    // ratio(eta) is linear and decreasing through ratio(0+) = 1; bisect.
    double lo = 1e-12, hi = 1.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        (ratio(mid) > target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

GaussianState build_tsu_distributed(const InterferometerParams& p) {
    p.validate();
    GaussianState s = vacuum(2);
    s = displace(s, 0, std::sqrt(p.alpha_sq));
    s = two_mode_squeeze(s, 0, 1, p.gain);
    s = phase_shift(s, 0, p.phi1);
    s = phase_shift(s, 1, p.phi2);
    s = loss(s, 0, p.eta);
    s = loss(s, 1, p.eta);
    return s;
}

GaussianState build_tsu_separable(const InterferometerParams& p) {
    p.validate();
    GaussianState s = vacuum(4);
    const double amp = std::sqrt(p.alpha_sq);
    // pair 1 (modes 0,1) senses phi1 on its probe; pair 2 (modes 2,3) senses
    // phi2 on its conjugate, mirroring the distributed readout roles.
    s = displace(s, 0, amp);
    s = two_mode_squeeze(s, 0, 1, p.gain);
    s = phase_shift(s, 0, p.phi1);
    s = displace(s, 2, amp);
    s = two_mode_squeeze(s, 2, 3, p.gain);
    s = phase_shift(s, 3, p.phi2);
    for (int m = 0; m < 4; ++m) s = loss(s, m, p.eta);
    return s;
}

GaussianState build_classical_distributed(const InterferometerParams& p) {
    p.validate();
    // coherent beams with the twin-beam optical powers G a^2 and (G-1) a^2
    GaussianState s = vacuum(2);
    s = displace(s, 0, std::sqrt(p.gain * p.alpha_sq));
    s = displace(s, 1, std::sqrt((p.gain - 1.0) * p.alpha_sq));
    s = phase_shift(s, 0, p.phi1);
    s = phase_shift(s, 1, p.phi2);
    s = loss(s, 0, p.eta);
    s = loss(s, 1, p.eta);
    return s;
}

GaussianState build_classical_separable(const InterferometerParams& p) {
    p.validate();
    GaussianState s = vacuum(4);
    s = displace(s, 0, std::sqrt(p.gain * p.alpha_sq));
    s = displace(s, 1, std::sqrt((p.gain - 1.0) * p.alpha_sq));
    s = phase_shift(s, 0, p.phi1);
    s = displace(s, 2, std::sqrt(p.gain * p.alpha_sq));
    s = displace(s, 3, std::sqrt((p.gain - 1.0) * p.alpha_sq));
    s = phase_shift(s, 3, p.phi2);
    for (int m = 0; m < 4; ++m) s = loss(s, m, p.eta);
    return s;
}

std::vector<HomodyneChannel> two_phase_channels(Scheme scheme, double g) {
    constexpr double lo_phase = M_PI / 2.0;
    switch (scheme) {
        case Scheme::tsu_distributed:
        case Scheme::classical_distributed:
            return {{0, lo_phase, 1.0}, {1, lo_phase, g}};
        case Scheme::tsu_separable:
        case Scheme::classical_separable:
            return {{0, lo_phase, 1.0}, {1, lo_phase, g},
                    {2, lo_phase, 1.0}, {3, lo_phase, g}};
        default:
            throw std::invalid_argument("two_phase_channels: not a two-phase scheme");
    }
}

MultiEntangledNetwork build_multi_entangled(int m_phases, double gain, double alpha_sq,
                                            const std::vector<double>& phases) {
    if (m_phases < 2 || m_phases % 2 != 0)
        throw std::invalid_argument("build_multi_entangled: M must be even and >= 2");
    if (!(alpha_sq > 0.0))
        throw std::invalid_argument("build_multi_entangled: alpha_sq must be > 0");
    if (static_cast<int>(phases.size()) != m_phases)
        throw std::invalid_argument("build_multi_entangled: need one phase per sensor");
    const int d = m_phases / 2;

    MultiEntangledNetwork net;
    const double amp = std::sqrt(alpha_sq);
    GaussianState s = vacuum(2);
    s = displace(s, 0, amp);
    s = displace(s, 1, amp);
    s = two_mode_squeeze(s, 0, 1, gain);
    s = balanced_split(s, 0, d);  // outputs 0, 2..d
    s = balanced_split(s, 1, d);  // outputs 1, d+1..2d-1

    net.sensor_modes.reserve(m_phases);
    net.sensor_modes.push_back(0);
    for (int j = 2; j <= d; ++j) net.sensor_modes.push_back(j);
    net.sensor_modes.push_back(1);
    for (int j = d + 1; j <= 2 * d - 1; ++j) net.sensor_modes.push_back(j);

    for (int j = 0; j < m_phases; ++j)
        s = phase_shift(s, net.sensor_modes[j], phases[j]);
    net.state = std::move(s);
    return net;
}

std::vector<HomodyneChannel> multi_entangled_channels(const MultiEntangledNetwork& net) {
    std::vector<HomodyneChannel> ch;
    ch.reserve(net.sensor_modes.size());
    for (int m : net.sensor_modes) ch.push_back({m, M_PI / 2.0, 1.0});
    return ch;
}

double multi_entangled_slope(int m_phases, double gain, double alpha_sq) {
    return 2.0 * std::sqrt(2.0 * m_phases * alpha_sq) *
           (std::sqrt(gain) + std::sqrt(gain - 1.0));
}

}  // namespace tsu11
