#include "saxlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace saxlab {

namespace {

double mean_of(const Series& s) {
    double sum = 0.0;
    for (double v : s) sum += v;
    return sum / static_cast<double>(s.size());
}

} // namespace

Series znormalize(const Series& s) {
    if (s.empty()) throw std::invalid_argument("znormalize: empty series");
    const std::size_t n = s.size();
    Series z(n);
    const double m = mean_of(s);
    for (std::size_t i = 0; i < n; ++i) z[i] = s[i] - m;
    // recenter once more so the output mean stays at machine zero even for
    // series whose offset dwarfs their spread
    const double residual = mean_of(z);
    double sumsq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        z[i] -= residual;
        sumsq += z[i] * z[i];
    }
    if (sumsq <= 0.0) {
        std::fill(z.begin(), z.end(), 0.0);
        return z;
    }
    const double sd = std::sqrt(sumsq / static_cast<double>(n));
    for (double& v : z) v /= sd;
    return z;
}

Series scale_unit(const Series& s) {
    if (s.empty()) throw std::invalid_argument("scale_unit: empty series");
    const auto [lo_it, hi_it] = std::minmax_element(s.begin(), s.end());
    const double lo = *lo_it, hi = *hi_it;
    Series out(s.size());
    if (lo == hi) {
        std::fill(out.begin(), out.end(), 0.5);
        return out;
    }
    const double span = hi - lo;
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = (s[i] - lo) / span;
    return out;
}

BinEdges quantile_edges(const Series& s, int bins) {
    if (bins < 2) throw std::invalid_argument("quantile_edges: need at least 2 bins");
    if (s.empty()) throw std::invalid_argument("quantile_edges: empty series");
    Series sorted(s);
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    BinEdges be;
    be.bin_count = bins;
    be.edges.reserve(static_cast<std::size_t>(bins) - 1);
    for (int k = 1; k < bins; ++k) {
        if (n == 1) {
            be.edges.push_back(sorted[0]);
            continue;
        }
        const double p = static_cast<double>(k) / bins;
        const double h = static_cast<double>(n - 1) * p;
        std::size_t i = static_cast<std::size_t>(h);
        if (i > n - 2) i = n - 2;
        const double frac = h - static_cast<double>(i);
        be.edges.push_back(sorted[i] + frac * (sorted[i + 1] - sorted[i]));
    }
    return be;
}

BinEdges uniform_edges(const Series& s, int bins) {
    if (bins < 2) throw std::invalid_argument("uniform_edges: need at least 2 bins");
    if (s.empty()) throw std::invalid_argument("uniform_edges: empty series");
    const auto [lo_it, hi_it] = std::minmax_element(s.begin(), s.end());
    const double lo = *lo_it, hi = *hi_it;
    BinEdges be;
    be.bin_count = bins;
    be.edges.reserve(static_cast<std::size_t>(bins) - 1);
    for (int k = 1; k < bins; ++k)
        be.edges.push_back(lo + (hi - lo) * static_cast<double>(k) / bins);
    return be;
}

Histogram histogram(const Series& s, const BinEdges& edges) {
    if (edges.bin_count < 2)
        throw std::invalid_argument("histogram: bin_count must be >= 2");
    if (edges.edges.size() + 1 != static_cast<std::size_t>(edges.bin_count))
        throw std::invalid_argument("histogram: edges/bin_count mismatch");
    if (!std::is_sorted(edges.edges.begin(), edges.edges.end()))
        throw std::invalid_argument("histogram: edges must be non-decreasing");

    Histogram h;
    h.counts.assign(static_cast<std::size_t>(edges.bin_count), 0);
    for (double v : s) {
        // first edge >= v; a value equal to an edge lands in the lower bin
        const auto it = std::lower_bound(edges.edges.begin(), edges.edges.end(), v);
        ++h.counts[static_cast<std::size_t>(it - edges.edges.begin())];
    }
    h.total = static_cast<std::int64_t>(s.size());
    return h;
}

} // namespace saxlab
