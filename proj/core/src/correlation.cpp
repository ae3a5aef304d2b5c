#include "saxlab/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace saxlab {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::vector<double> centered(const Series& s) {
    double mean = 0.0;
    for (double v : s) mean += v;
    mean /= static_cast<double>(s.size());
    std::vector<double> z(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) z[i] = s[i] - mean;
    return z;
}

// Durbin-Levinson on an autocorrelation sequence rho[0..K]
std::vector<double> pacf_from_acf(const std::vector<double>& rho) {
    const std::size_t max_lag = rho.size() - 1;
    std::vector<double> out(max_lag + 1, kNan);
    out[0] = 1.0;
    if (max_lag == 0) return out;

    std::vector<double> phi_prev(max_lag + 1, 0.0);
    std::vector<double> phi_cur(max_lag + 1, 0.0);
    out[1] = rho[1];
    phi_prev[1] = rho[1];
    double err = 1.0 - rho[1] * rho[1];

    for (std::size_t k = 2; k <= max_lag; ++k) {
        if (!(err > 1e-14)) break; // perfectly predictable; deeper lags undefined
        double num = rho[k];
        for (std::size_t j = 1; j < k; ++j) num -= phi_prev[j] * rho[k - j];
        double phi_kk = num / err;
        if (std::abs(phi_kk) > 1.0 + 1e-9) break; // numerical degeneracy
        phi_kk = std::clamp(phi_kk, -1.0, 1.0);
        out[k] = phi_kk;
        for (std::size_t j = 1; j < k; ++j)
            phi_cur[j] = phi_prev[j] - phi_kk * phi_prev[k - j];
        phi_cur[k] = phi_kk;
        std::copy_n(phi_cur.begin(), k + 1, phi_prev.begin());
        err *= 1.0 - phi_kk * phi_kk;
    }
    return out;
}

} // namespace

int default_max_lag(std::size_t n) {
    if (n < 3) return 1;
    const int by_rule = static_cast<int>(std::floor(10.0 * std::log10(static_cast<double>(n))));
    return std::max(1, std::min(static_cast<int>(n) - 2, by_rule));
}

std::vector<double> acf(const Series& s, int max_lag) {
    const std::size_t n = s.size();
    if (n < 2) throw std::invalid_argument("acf: need at least 2 samples");
    if (max_lag < 0 || static_cast<std::size_t>(max_lag) >= n)
        throw std::invalid_argument("acf: max_lag must be in [0, length)");

    const std::vector<double> z = centered(s);
    double denom = 0.0;
    for (double v : z) denom += v * v;
    if (denom <= 0.0)
        throw std::domain_error("acf: constant series has undefined autocorrelation");

    std::vector<double> rho(static_cast<std::size_t>(max_lag) + 1);
    rho[0] = 1.0;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(max_lag); ++k) {
        double cov = 0.0;
        for (std::size_t t = 0; t + k < n; ++t) cov += z[t] * z[t + k];
        rho[k] = cov / denom;
    }
    return rho;
}

std::vector<double> pacf(const Series& s, int max_lag) {
    if (max_lag < 1) throw std::invalid_argument("pacf: max_lag must be >= 1");
    if (2 * static_cast<std::size_t>(max_lag) >= s.size())
        throw std::invalid_argument("pacf: max_lag must be < length/2");
    return pacf_from_acf(acf(s, max_lag));
}

double abs_mean_acf(const Series& s, int max_lag, bool include_lag0) {
    if (max_lag < 1 && !include_lag0)
        throw std::invalid_argument("abs_mean_acf: no lags selected");
    const std::vector<double> rho = acf(s, max_lag);
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = include_lag0 ? 0 : 1; k < rho.size(); ++k) {
        sum += std::abs(rho[k]);
        ++count;
    }
    return sum / static_cast<double>(count);
}

CorrelogramResult correlogram(const Series& s, int max_lag, bool include_lag0) {
    CorrelogramResult r;
    r.acf = acf(s, max_lag);
    r.conf_band = 1.96 / std::sqrt(static_cast<double>(s.size()));

    // pacf is defined for lags below length/2; deeper rows stay NaN
    const int pacf_lag = std::min<int>(max_lag, (static_cast<int>(s.size()) - 1) / 2);
    r.pacf.assign(r.acf.size(), kNan);
    if (pacf_lag >= 1) {
        const auto partial =
            pacf_from_acf(std::vector<double>(r.acf.begin(), r.acf.begin() + pacf_lag + 1));
        std::copy(partial.begin(), partial.end(), r.pacf.begin());
    } else {
        r.pacf[0] = 1.0;
    }

    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = include_lag0 ? 0 : 1; k < r.acf.size(); ++k) {
        sum += std::abs(r.acf[k]);
        ++count;
    }
    r.abs_mean_acf = count ? sum / static_cast<double>(count) : 0.0;
    return r;
}

} // namespace saxlab
