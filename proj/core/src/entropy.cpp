#include "saxlab/entropy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace saxlab {

namespace {

constexpr int kMinOrder = 2;
constexpr int kMaxOrder = 7;

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void check_spec(const PermutationSpec& spec) {
    if (spec.order < kMinOrder || spec.order > kMaxOrder)
        throw std::invalid_argument("permutation entropy: order must be in [2, 7]");
    if (spec.delay < 1)
        throw std::invalid_argument("permutation entropy: delay must be >= 1");
}

// Encodes a rank pattern as sum(rank[j] * order^j); fits easily in 32
// bits for order <= 7.
std::uint32_t encode_pattern(const std::array<double, kMaxOrder>& window, int order) {
    std::array<double, kMaxOrder> distinct;
    std::copy_n(window.begin(), order, distinct.begin());
    std::sort(distinct.begin(), distinct.begin() + order);
    const auto distinct_end = std::unique(distinct.begin(), distinct.begin() + order);

    std::uint32_t key = 0;
    std::uint32_t base = 1;
    for (int j = 0; j < order; ++j) {
        const auto rank = std::lower_bound(distinct.begin(), distinct_end, window[j]) -
                          distinct.begin();
        key += static_cast<std::uint32_t>(rank) * base;
        base *= static_cast<std::uint32_t>(order);
    }
    return key;
}

PePoint pe_over(std::span<const double> xs, const PermutationSpec& spec) {
    check_spec(spec);
    const std::size_t order = static_cast<std::size_t>(spec.order);
    const std::size_t delay = static_cast<std::size_t>(spec.delay);
    const std::size_t reach = (order - 1) * delay;
    if (xs.size() < reach + 1)
        throw std::invalid_argument("permutation entropy: series too short for (order, delay)");

    const std::size_t windows = xs.size() - reach;
    // ordered map keeps the summation order deterministic
    std::map<std::uint32_t, std::int64_t> counts;
    std::array<double, kMaxOrder> window{};
    for (std::size_t i = 0; i < windows; ++i) {
        for (std::size_t j = 0; j < order; ++j) window[j] = xs[i + j * delay];
        ++counts[encode_pattern(window, spec.order)];
    }

    double entropy = 0.0;
    for (const auto& [key, c] : counts) {
        const double p = static_cast<double>(c) / static_cast<double>(windows);
        entropy -= p * std::log(p);
    }

    PePoint point;
    point.spec = spec;
    point.raw = entropy;
    point.value = std::clamp(entropy / std::log(static_cast<double>(factorial(spec.order))),
                             0.0, 1.0);
    point.reliable = static_cast<std::int64_t>(windows) > 5 * factorial(spec.order);
    return point;
}

} // namespace

std::vector<int> rank_pattern(std::span<const double> window) {
    std::vector<double> distinct(window.begin(), window.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<int> pattern;
    pattern.reserve(window.size());
    for (double v : window)
        pattern.push_back(static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin()));
    return pattern;
}

PePoint permutation_entropy(const Series& s, const PermutationSpec& spec) {
    return pe_over(std::span<const double>(s.data(), s.size()), spec);
}

PePoint pe_on_sax(const SaxWord& word, const PermutationSpec& spec) {
    std::vector<double> xs;
    xs.reserve(word.symbols.size());
    for (int v : word.symbols) xs.push_back(static_cast<double>(v));
    return pe_over(std::span<const double>(xs.data(), xs.size()), spec);
}

std::vector<PePoint> pe_profile(const Series& s, const std::vector<int>& orders,
                                const std::vector<int>& delays) {
    std::vector<PePoint> grid;
    for (int n : orders) {
        if (n < kMinOrder || n > kMaxOrder) continue;
        for (int t : delays) {
            if (t < 1) continue;
            const std::size_t reach = static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(t);
            if (s.size() < reach + 1) continue; // cell absent, not zero
            grid.push_back(permutation_entropy(s, PermutationSpec{n, t}));
        }
    }
    return grid;
}

} // namespace saxlab
