#pragma once

// Shared helpers for the unit and acceptance suites: tolerant comparisons,
// CSV splitting, process capture for CLI checks, a KS normality test, and a
// tiny deterministic generator for parameter grids.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace testsup {

inline bool approx_rel(double a, double b, double tol) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= tol * std::max(scale, 1e-300);
}

inline double rel_diff(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

struct ExecResult {
    int exit_code = -1;
    std::string output;
};

// Run through /bin/sh, capture stdout; stderr is left on the test's stderr.
inline ExecResult run_command(const std::string& cmd) {
    ExecResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed: " + cmd);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

// Value of "key=..." inside a whitespace-separated report line.
inline std::string report_field(const std::string& line, const std::string& key) {
    const std::string tag = key + "=";
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok)
        if (tok.rfind(tag, 0) == 0) return tok.substr(tag.size());
    throw std::runtime_error("field " + key + " not found in: " + line);
}

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Kolmogorov-Smirnov p-value of the sample against the standard normal.
inline double ks_p_normal(std::vector<double> zs) {
    const size_t n = zs.size();
    if (n < 5) throw std::invalid_argument("ks_p_normal: need at least 5 points");
    std::sort(zs.begin(), zs.end());
    double d = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double f = normal_cdf(zs[i]);
        d = std::max(d, std::abs(f - double(i) / double(n)));
        d = std::max(d, std::abs(double(i + 1) / double(n) - f));
    }
    const double sn = std::sqrt(double(n));
    const double lambda = (sn + 0.12 + 0.11 / sn) * d;
    double p = 0.0;
    for (int j = 1; j <= 100; ++j)
        p += 2.0 * (j % 2 == 1 ? 1.0 : -1.0) * std::exp(-2.0 * j * j * lambda * lambda);
    return std::min(1.0, std::max(0.0, p));
}

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("loglog_slope: need matching points");
    const size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        const double lx = std::log(xs[i]);
        const double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (double(n) * sxy - sx * sy) / (double(n) * sxx - sx * sx);
}

// xorshift64* grid generator; deterministic across platforms.
struct GridRng {
    std::uint64_t state;
    explicit GridRng(std::uint64_t seed) : state(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545F4914F6CDD1DULL;
    }
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    double in(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

}  // namespace testsup
