#pragma once

#include "saxlab/series.hpp"
#include "saxlab/symbolic.hpp"

#include <span>
#include <vector>

namespace saxlab {

/// Embedding parameters for permutation entropy: order in [2,7] (pattern
/// pool size n!), delay >= 1.
struct PermutationSpec {
    int order = 3;
    int delay = 1;
};

/// One permutation-entropy measurement. `value` is H / ln(order!) clamped
/// to [0,1]; `raw` is H in nats. `reliable` is set when the usable window
/// count exceeds 5 * order!.
struct PePoint {
    PermutationSpec spec;
    double value = 0.0;
    double raw = 0.0;
    bool reliable = false;
};

/// Ordinal pattern of a window with tied values sharing a rank: each
/// element maps to the number of strictly smaller distinct values, so
/// [3,4,4,3,1] -> [1,2,2,1,0].
std::vector<int> rank_pattern(std::span<const double> window);

/// Counts rank patterns over the delayed embedding windows
/// (x_i, x_{i+t}, ..., x_{i+(order-1)t}) and returns normalized Shannon
/// entropy of their frequencies. Throws if the series is shorter than
/// (order-1)*delay + 1.
PePoint permutation_entropy(const Series& s, const PermutationSpec& spec);

/// Same measurement on a symbol-index sequence, where the tie rule does
/// the heavy lifting because symbols repeat.
PePoint pe_on_sax(const SaxWord& word, const PermutationSpec& spec);

/// Every computable (order, delay) cell; cells the series is too short
/// for (or with parameters out of range) are omitted rather than zeroed.
std::vector<PePoint> pe_profile(const Series& s, const std::vector<int>& orders,
                                const std::vector<int>& delays);

} // namespace saxlab
