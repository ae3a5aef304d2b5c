#pragma once

#include <cstdint>
#include <vector>

namespace saxlab {

/// A finite real-valued sequence in sampling order. Loaders and generators
/// guarantee every value is finite; the numeric kernels assume it.
using Series = std::vector<double>;

/// How histogram bin edges are placed over a signal.
enum class Binning { quantile, uniform };

/// Cut points partitioning the real line into `bin_count` bins.
/// `edges` holds bin_count - 1 non-decreasing values.
struct BinEdges {
    std::vector<double> edges;
    int bin_count = 0;
};

struct Histogram {
    std::vector<std::int64_t> counts;
    std::int64_t total = 0;
};

/// Shift/scale to sample mean 0 and population standard deviation 1
/// (divisor N). A constant series maps to all zeros.
Series znormalize(const Series& s);

/// Affine map onto [0,1]: min -> 0, max -> 1. A constant series maps to
/// all 0.5.
Series scale_unit(const Series& s);

/// Empirical quantile cut points at probabilities k/bins, k = 1..bins-1,
/// with linear interpolation between order statistics.
BinEdges quantile_edges(const Series& s, int bins);

/// Equal-width cut points over [min(s), max(s)].
BinEdges uniform_edges(const Series& s, int bins);

/// Bin membership counts. Bin i covers (edges[i-1], edges[i]]; the first
/// bin is open below and the last open above, so a value equal to an edge
/// falls in the lower bin and every value is counted exactly once.
Histogram histogram(const Series& s, const BinEdges& edges);

} // namespace saxlab
