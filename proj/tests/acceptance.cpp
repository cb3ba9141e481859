// Acceptance gate for the sensing library.  Ten independent checks, each
// printed as one PASS/FAIL line with its runtime; the process exit code is
// the number of failures.  Tolerances are pinned next to each check.
//
// Usage: tsu11_acceptance --golden <dir-with-fig*.csv> --cli <path-to-cli>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "support.hpp"
#include "tsu11/figures.hpp"
#include "tsu11/metrology.hpp"
#include "tsu11/montecarlo.hpp"
#include "tsu11/schemes.hpp"

using namespace tsu11;
using testsup::rel_diff;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
    void expect_close(double got, double want, double tol, const std::string& what) {
        if (!(rel_diff(got, want) <= tol)) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what << ": got " << got << ", want " << want;
        }
    }
};

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> v(count);
    for (int k = 0; k < count; ++k) v[k] = lo + (hi - lo) * double(k) / double(count - 1);
    return v;
}

std::vector<double> logspace(double lo, double hi, int count) {
    std::vector<double> v(count);
    const double l0 = std::log(lo), l1 = std::log(hi);
    for (int k = 0; k < count; ++k)
        v[k] = std::exp(l0 + (l1 - l0) * double(k) / double(count - 1));
    return v;
}

InterferometerParams reference_point() {
    InterferometerParams p;  // G=5, alpha_sq=100, eta=1, g=1
    return p;
}

// 1. Advantage window at G=5: (0.618, 1.618) within +-1e-3, under 1 s.
void criterion_advantage_window(Check& c) {
    const auto window = advantage_g_window(5.0, 1.0);
    c.expect(window.has_value(), "no window at G=5");
    if (!window) return;
    const double tol = 1e-3;
    c.expect(std::abs(window->first - 0.618) <= tol, "lower edge off 0.618");
    c.expect(std::abs(window->second - 1.618) <= tol, "upper edge off 1.618");
}

// 2. Combination weights at the window edges, within +-1e-3.
void criterion_beta_weights(Check& c) {
    const double tol = 1e-3;
    const auto lo = beta_weights(5.0, 0.618);
    c.expect(std::abs(lo.beta1 - 0.644) <= tol, "beta1(g=0.618)");
    c.expect(std::abs(lo.beta2 - 0.356) <= tol, "beta2(g=0.618)");
    const auto hi = beta_weights(5.0, 1.618);
    c.expect(std::abs(hi.beta1 - 0.409) <= tol, "beta1(g=1.618)");
    c.expect(std::abs(hi.beta2 - 0.591) <= tol, "beta2(g=1.618)");
}

// 3. g=1 saturates the Cramer-Rao bound: closed forms within 1e-10 and the
//    numeric Fisher route within 1e-6, over a 10 x 10 x 5 parameter grid.
void criterion_qcrb_saturation(Check& c) {
    const double tol_closed = 1e-10;
    const double tol_numeric = 1e-6;
    double worst_closed = 0.0, worst_numeric = 0.0;
    for (double gain : linspace(1.1, 10.0, 10))
        for (double eta : linspace(0.1, 1.0, 10))
            for (double a2 : logspace(10.0, 1e4, 5)) {
                InterferometerParams p;
                p.gain = gain;
                p.alpha_sq = a2;
                p.eta = eta;
                p.g = 1.0;
                const double closed = qcrb_tsu(p);
                worst_closed = std::max(
                    worst_closed, rel_diff(lod_tsu_distributed(p).delta_phi_sq, closed));

                const auto state_at = [&](const std::vector<double>& phases) {
                    InterferometerParams q = p;
                    q.phi1 = phases[0];
                    q.phi2 = phases[1];
                    return build_tsu_distributed(q);
                };
                const auto fisher = qfi_matrix(state_at, {0.0, 0.0});
                const auto w = beta_weights(gain, 1.0);
                Eigen::VectorXd beta(2);
                beta << w.beta1, w.beta2;
                worst_numeric =
                    std::max(worst_numeric, rel_diff(qcrb(fisher, beta), closed));
            }
    c.detail << "max rel: closed " << worst_closed << ", fisher " << worst_numeric;
    c.expect(worst_closed <= tol_closed, "closed-form gap above 1e-10");
    c.expect(worst_numeric <= tol_numeric, "fisher-route gap above 1e-6");
}

// 4. Separable schemes cost exactly a factor 2 (= 3.0103 dB) in LOD.
void criterion_factor_two(Check& c) {
    for (double gain : linspace(1.1, 10.0, 10))
        for (double eta : linspace(0.1, 1.0, 10))
            for (double a2 : logspace(10.0, 1e4, 5))
                for (double g : {0.618, 1.0, 1.7}) {
                    InterferometerParams p;
                    p.gain = gain;
                    p.alpha_sq = a2;
                    p.eta = eta;
                    p.g = g;
                    const double qr = lod_tsu_separable(p).delta_phi_sq /
                                      lod_tsu_distributed(p).delta_phi_sq;
                    const double cr = lod_classical_separable(p).delta_phi_sq /
                                      lod_classical_distributed(p).delta_phi_sq;
                    c.expect(qr == 2.0, "twin-beam ratio not exactly 2");
                    c.expect(cr == 2.0, "coherent ratio not exactly 2");
                }
    c.expect(std::abs(db(2.0) - 3.0103) <= 5e-5, "3 dB statement");
}

// 5. Multi-phase closed forms: M=2 equality at 1/80800 exactly; the M=4
//    entangled/separable ratio equals 2(n+1)/(Mn+2) = 101/201 within 1e-14.
void criterion_multi_closed_forms(Check& c) {
    const double ent2 = lod_multi_entangled_optimal(2, 100.0).delta_phi_sq;
    const double sep2 = lod_multi_separable(2, 100.0).delta_phi_sq;
    c.expect(ent2 == 1.0 / 80800.0, "entangled M=2 != 1/80800");
    c.expect(sep2 == 1.0 / 80800.0, "separable M=2 != 1/80800");
    c.expect(ent2 == sep2, "M=2 schemes differ");

    const double ratio = lod_multi_entangled_optimal(4, 100.0).delta_phi_sq /
                         lod_multi_separable(4, 100.0).delta_phi_sq;
    c.expect_close(ratio, 101.0 / 201.0, 1e-14, "M=4 ratio");
}

// 6. The budget-constrained optimizer lands on 1/(2Mn(Mn+2)) within 1e-6
//    for (M, n) in {2,4,10,50} x {10,100,1000}, under 5 s.
void criterion_optimizer(Check& c) {
    double worst = 0.0;
    for (int m : {2, 4, 10, 50})
        for (double n : {10.0, 100.0, 1000.0}) {
            const auto best = optimize_entangled(m, n);
            const double mn = double(m) * n;
            worst = std::max(worst,
                             rel_diff(best.delta_phi_sq, 1.0 / (2.0 * mn * (mn + 2.0))));
        }
    c.detail << "max rel " << worst;
    c.expect(worst <= 1e-6, "optimum off the closed form");
}

// 7. Scaling exponents from log-log fits: entangled vs M at n=1000 and
//    separable vs n at M=2 both -2.00 +- 0.02; classical vs n -1.00 +- 0.01.
void criterion_scaling(Check& c) {
    std::vector<double> ms, ent;
    for (int m = 10; m <= 100; m += 2) {
        ms.push_back(m);
        ent.push_back(lod_multi_entangled_optimal(m, 1000.0).delta_phi_sq);
    }
    const double s_ent = testsup::loglog_slope(ms, ent);

    std::vector<double> ns, sep, cla;
    for (double n : logspace(100.0, 10000.0, 25)) {
        ns.push_back(n);
        sep.push_back(lod_multi_separable(2, n).delta_phi_sq);
        cla.push_back(lod_multi_classical(2, n).delta_phi_sq);
    }
    const double s_sep = testsup::loglog_slope(ns, sep);
    const double s_cla = testsup::loglog_slope(ns, cla);

    c.detail << "slopes ent " << s_ent << ", sep " << s_sep << ", cla " << s_cla;
    c.expect(std::abs(s_ent + 2.0) <= 0.02, "entangled exponent");
    c.expect(std::abs(s_sep + 2.0) <= 0.02, "separable exponent");
    c.expect(std::abs(s_cla + 1.0) <= 0.01, "classical exponent");
}

// 8. Sampling oracle: every scheme's empirical LOD within |z| < 4 at 1e6
//    samples, and 50 seeds of z-scores pass a KS normality test at p > 0.01;
//    under 60 s.
void criterion_monte_carlo(Check& c) {
    McConfig config;
    config.samples = 1'000'000;
    config.seed = 1;
    const auto p = reference_point();

    for (Scheme s : {Scheme::tsu_distributed, Scheme::tsu_separable,
                     Scheme::classical_distributed, Scheme::classical_separable}) {
        const McResult r = mc_lod(s, p, config);
        std::ostringstream what;
        what << scheme_name(s) << " z=" << r.z_score;
        c.expect(std::abs(r.z_score) < 4.0, what.str());
    }
    const auto best = optimize_entangled(4, 100.0);
    const McResult r = mc_lod_multi_entangled(4, best.gain, best.alpha_sq, config);
    c.expect(std::abs(r.z_score) < 4.0, "multi-ent z out of range");

    std::vector<double> zs;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        config.seed = seed;
        zs.push_back(mc_lod(Scheme::tsu_distributed, p, config).z_score);
    }
    const double pval = testsup::ks_p_normal(zs);
    c.detail << "KS p " << pval;
    c.expect(pval > 0.01, "z-scores fail normality");
}

// 9. Squeezing anchor: the transmission root-solved for a 1.7 dB joint-noise
//    reduction sits near 0.343 and is confirmed by sampling to 1.7 +- 0.1 dB.
void criterion_squeezing_anchor(Check& c) {
    const double eta = eta_for_noise_reduction_db(5.0, 1.0, 1.7);
    c.detail << "eta " << eta;
    c.expect(std::abs(eta - 0.343) <= 1e-3, "transmission root off 0.343");

    InterferometerParams p = reference_point();
    p.eta = eta;
    McConfig config;
    config.samples = 1'000'000;
    config.seed = 20260819;
    const McResult r = mc_lod(Scheme::tsu_distributed, p, config);
    const double slope = two_phase_slope(p);
    const double var_emp = r.empirical_lod * slope * slope;
    const double reduction_db = -db(var_emp / 2.0);  // benchmark g^2+1 = 2
    c.detail << ", measured " << reduction_db << " dB";
    c.expect(std::abs(reduction_db - 1.7) <= 0.1, "sampled reduction off 1.7 dB");
}

// 10. Golden figures: CLI output byte-identical to the checked-in CSVs and
//     qualitatively ordered like the reference curves.
void criterion_golden_figures(Check& c, const std::string& golden_dir,
                              const std::string& cli) {
    namespace fs = std::filesystem;
    const fs::path tmp =
        fs::temp_directory_path() / ("tsu11-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(tmp);

    for (const char* name : {"fig2c", "fig2d", "fig5d"}) {
        const fs::path out = tmp / (std::string(name) + ".csv");
        const auto run = testsup::run_command(cli + " " + name + " --out " + out.string());
        c.expect(run.exit_code == 0, std::string(name) + " exited nonzero");
        const std::string fresh = testsup::read_file(out.string());
        const std::string golden =
            testsup::read_file(golden_dir + "/" + name + ".csv");
        c.expect(fresh == golden, std::string(name) + " differs from golden");
    }
    fs::remove_all(tmp);

    // quantum below classical across the gain sweep
    const auto rows2c = [&] {
        std::vector<std::vector<std::string>> rows;
        bool first = true;
        for (const auto& line : testsup::split_lines(fig2c_csv())) {
            if (first || line.empty() || line[0] == '#') {
                first = false;
                continue;
            }
            rows.push_back(testsup::split_csv(line));
        }
        return rows;
    }();
    bool quantum_below = true;
    for (const auto& row : rows2c) {
        if (std::stod(row[4]) >= std::stod(row[2])) quantum_below = false;  // eta = 1
        if (std::stod(row[8]) >= std::stod(row[6])) quantum_below = false;  // eta = 0.8
    }
    c.expect(quantum_below, "twin-beam curve not below coherent in gain sweep");

    // entangled below separable from M = 4 on
    bool entangled_below = true;
    bool first = true;
    for (const auto& line : testsup::split_lines(fig5d_csv())) {
        if (first) {
            first = false;
            continue;
        }
        const auto row = testsup::split_csv(line);
        const double m = std::stod(row[0]);
        if (m >= 4.0 && std::stod(row[3]) >= std::stod(row[2])) entangled_below = false;
    }
    c.expect(entangled_below, "entangled curve not below separable for M >= 4");
}

int run_all(const std::string& golden_dir, const std::string& cli) {
    struct Item {
        const char* name;
        double budget_ms;  // criterion runtime ceiling, 0 = none
        std::function<void(Check&)> fn;
    };
    const std::vector<Item> items = {
        {"advantage window (0.618, 1.618) +-1e-3", 1000.0, criterion_advantage_window},
        {"beta weights at the window edges +-1e-3", 0.0, criterion_beta_weights},
        {"QCRB saturation: closed 1e-10, fisher 1e-6 on 10x10x5 grid", 10000.0,
         criterion_qcrb_saturation},
        {"separable/distributed factor 2 exact (3.0103 dB)", 0.0, criterion_factor_two},
        {"multi-phase closed forms: 1/80800 exact, 101/201 to 1e-14", 0.0,
         criterion_multi_closed_forms},
        {"optimizer meets 1/(2Mn(Mn+2)) to 1e-6 on 4x3 grid", 5000.0, criterion_optimizer},
        {"scaling exponents -2/-2/-1 within 0.02/0.02/0.01", 0.0, criterion_scaling},
        {"sampling oracle |z|<4 at 1e6 and KS p>0.01 over 50 seeds", 60000.0,
         criterion_monte_carlo},
        {"squeezing anchor 1.7 +- 0.1 dB at eta ~ 0.343", 0.0, criterion_squeezing_anchor},
        {"golden figures byte-identical and correctly ordered", 0.0,
         [&](Check& c) { criterion_golden_figures(c, golden_dir, cli); }},
    };

    int failures = 0;
    for (size_t i = 0; i < items.size(); ++i) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            items[i].fn(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail << "exception: " << e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        if (items[i].budget_ms > 0.0 && ms > items[i].budget_ms) {
            c.ok = false;
            c.detail << "; over time budget " << items[i].budget_ms << " ms";
        }
        if (!c.ok) ++failures;
        std::printf("%s %2zu  %s (%.0f ms)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1,
                    items[i].name, ms, c.detail.tellp() > 0 ? " -- " : "",
                    c.detail.str().c_str());
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("all %zu acceptance checks passed\n", items.size());
    else
        std::printf("%d of %zu acceptance checks FAILED\n", failures, items.size());
    return failures;
}

}  // namespace

int main(int argc, char** argv) {
    std::string golden_dir, cli;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--golden")
            golden_dir = argv[i + 1];
        else if (flag == "--cli")
            cli = argv[i + 1];
    }
    if (golden_dir.empty() || cli.empty()) {
        std::fprintf(stderr, "usage: tsu11_acceptance --golden <dir> --cli <binary>\n");
        return 1;
    }
    return run_all(golden_dir, cli);
}
