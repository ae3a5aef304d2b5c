#include "saxlab/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace saxlab {

namespace {

// Wichura's PPND16 rational approximations for the standard normal
// quantile function, accurate to ~1e-15 over (0,1).
double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("normal_quantile: p must be in (0,1)");
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                   1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                 1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                   5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                 4.2313330701600911252e+1) * r + 1.0);
    }
    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                    2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                  3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
                4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
              (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                    1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                  6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
                2.05319162663775882187e+0) * r + 1.0);
    } else {
        r -= 5.0;
        val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                    1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                  2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
                5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
              (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                    1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                  1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                5.99832206555887937690e-1) * r + 1.0);
    }
    return (q < 0.0) ? -val : val;
}

// [floor(i*n/w), floor((i+1)*n/w)) in exact integer arithmetic
std::pair<std::size_t, std::size_t> window_bounds(std::size_t i, std::size_t n, std::size_t w) {
    return {i * n / w, (i + 1) * n / w};
}

} // namespace

void validate(const SaxConfig& cfg) {
    if (cfg.n < 1)
        throw std::invalid_argument("SaxConfig: window length n must be >= 1");
    if (cfg.w < 1 || cfg.w > cfg.n)
        throw std::invalid_argument("SaxConfig: word number w must satisfy 1 <= w <= n");
    if (cfg.a < 2 || cfg.a > 26)
        throw std::invalid_argument("SaxConfig: alphabet size a must be in [2, 26]");
}

PaaValues paa(const Series& s, int w) {
    if (s.empty()) throw std::invalid_argument("paa: empty series");
    if (w < 1 || static_cast<std::size_t>(w) > s.size())
        throw std::invalid_argument("paa: word number w must satisfy 1 <= w <= length");
    const std::size_t n = s.size();
    const std::size_t words = static_cast<std::size_t>(w);
    PaaValues p;
    p.source_length = n;
    p.means.reserve(words);
    for (std::size_t i = 0; i < words; ++i) {
        const auto [lo, hi] = window_bounds(i, n, words);
        double sum = 0.0;
        for (std::size_t j = lo; j < hi; ++j) sum += s[j];
        p.means.push_back(sum / static_cast<double>(hi - lo));
    }
    return p;
}

Breakpoints gaussian_breakpoints(int a) {
    if (a < 2 || a > 26)
        throw std::invalid_argument("gaussian_breakpoints: alphabet size must be in [2, 26]");
    Breakpoints b;
    b.cuts.resize(static_cast<std::size_t>(a) - 1);
    // compute the lower half and mirror it so symmetry holds bit-exactly
    for (int k = 1; k <= (a - 1) / 2; ++k) {
        const double c = normal_quantile(static_cast<double>(k) / a);
        b.cuts[static_cast<std::size_t>(k) - 1] = c;
        b.cuts[static_cast<std::size_t>(a - 1 - k)] = -c;
    }
    if (a % 2 == 0) b.cuts[static_cast<std::size_t>(a / 2) - 1] = 0.0;
    return b;
}

SaxWord sax_word(const PaaValues& p, const Breakpoints& b) {
    if (b.cuts.empty())
        throw std::invalid_argument("sax_word: breakpoints must have at least one cut");
    SaxWord word;
    word.alphabet = static_cast<int>(b.cuts.size()) + 1;
    word.symbols.reserve(p.means.size());
    for (double v : p.means) {
        const auto it = std::lower_bound(b.cuts.begin(), b.cuts.end(), v);
        word.symbols.push_back(static_cast<int>(it - b.cuts.begin()));
    }
    return word;
}

Series reconstruct_paa(const PaaValues& p) {
    if (p.means.empty() || p.source_length < p.means.size())
        throw std::invalid_argument("reconstruct_paa: invalid PaaValues");
    Series out(p.source_length);
    const std::size_t w = p.means.size();
    for (std::size_t i = 0; i < w; ++i) {
        const auto [lo, hi] = window_bounds(i, p.source_length, w);
        std::fill(out.begin() + static_cast<std::ptrdiff_t>(lo),
                  out.begin() + static_cast<std::ptrdiff_t>(hi), p.means[i]);
    }
    return out;
}

Series reconstruct_sax(const SaxWord& word, std::size_t n) {
    if (word.symbols.empty() || n < word.symbols.size())
        throw std::invalid_argument("reconstruct_sax: word longer than target length");
    Series out(n);
    const std::size_t w = word.symbols.size();
    for (std::size_t i = 0; i < w; ++i) {
        const auto [lo, hi] = window_bounds(i, n, w);
        std::fill(out.begin() + static_cast<std::ptrdiff_t>(lo),
                  out.begin() + static_cast<std::ptrdiff_t>(hi),
                  static_cast<double>(word.symbols[i]));
    }
    return out;
}

std::string to_letters(const SaxWord& word) {
    std::string letters;
    letters.reserve(word.symbols.size());
    for (int s : word.symbols) {
        if (s < 0 || s >= word.alphabet)
            throw std::invalid_argument("to_letters: symbol outside alphabet");
        letters.push_back(static_cast<char>('A' + s));
    }
    return letters;
}

SymbolicResult symbolize(const Series& s, const SaxConfig& cfg) {
    SaxConfig resolved = cfg;
    if (resolved.n == 0) resolved.n = static_cast<int>(s.size());
    if (resolved.n != static_cast<int>(s.size()))
        throw std::invalid_argument("symbolize: cfg.n does not match series length");
    validate(resolved);

    SymbolicResult r;
    const Series z = znormalize(s);
    r.paa = paa(z, resolved.w);
    r.word = sax_word(r.paa, gaussian_breakpoints(resolved.a));
    r.paa_recon = reconstruct_paa(r.paa);
    r.sax_recon = reconstruct_sax(r.word, z.size());
    return r;
}

} // namespace saxlab
