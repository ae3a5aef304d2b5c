#pragma once

#include "saxlab/series.hpp"

#include <cstddef>
#include <vector>

namespace saxlab {

/// Autocorrelation and partial autocorrelation over lags 0..max_lag.
/// pacf entries past the computable range (lag >= length/2, or after a
/// recursion singularity) carry NaN. abs_mean_acf averages |acf[k]| over
/// k = 1..max_lag unless lag 0 was requested too.
struct CorrelogramResult {
    std::vector<double> acf;
    std::vector<double> pacf;
    double abs_mean_acf = 0.0;
    double conf_band = 0.0; // +/- 1.96/sqrt(n), for plotting
};

/// min(n-2, floor(10*log10(n))), the usual correlogram window, at least 1.
int default_max_lag(std::size_t n);

/// Biased sample autocorrelation: full-series mean, divisor-n covariance,
/// so the sequence is positive semi-definite. Throws std::domain_error on
/// a constant series.
std::vector<double> acf(const Series& s, int max_lag);

/// Partial autocorrelations via the Durbin-Levinson recursion on acf().
/// Requires max_lag < length/2. pacf[0] = 1 and pacf[1] = acf[1]; lags
/// past a numerical singularity are NaN.
std::vector<double> pacf(const Series& s, int max_lag);

/// Mean of |acf[k]| for k = 1..max_lag; lag 0 joins the average only when
/// include_lag0 is set.
double abs_mean_acf(const Series& s, int max_lag, bool include_lag0 = false);

CorrelogramResult correlogram(const Series& s, int max_lag, bool include_lag0 = false);

} // namespace saxlab
