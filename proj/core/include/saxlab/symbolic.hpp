#pragma once

#include "saxlab/series.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace saxlab {

/// The (n, w, a) triple: series/window length, word number and alphabet
/// size. Symbols are drawn from A-Z, so 2 <= a <= 26.
struct SaxConfig {
    int n = 0;
    int w = 0;
    int a = 0;
};

/// Throws std::invalid_argument unless 1 <= w <= n and 2 <= a <= 26.
void validate(const SaxConfig& cfg);

/// Window means of a series, one per word position.
struct PaaValues {
    std::vector<double> means;
    std::size_t source_length = 0;
};

/// Symbol indices in [0, alphabet). Index i renders as letter 'A' + i.
struct SaxWord {
    std::vector<int> symbols;
    int alphabet = 0;
};

/// The a-1 cut points splitting N(0,1) into equiprobable segments.
struct Breakpoints {
    std::vector<double> cuts;
};

/// One series pushed through the full symbolization pipeline.
/// paa_recon substitutes each sample with its window mean (z-space);
/// sax_recon substitutes each sample with its symbol digit (0..25).
struct SymbolicResult {
    PaaValues paa;
    SaxWord word;
    Series paa_recon;
    Series sax_recon;
};

/// Piecewise aggregate approximation. Window i spans indices
/// [floor(i*n/w), floor((i+1)*n/w)), so the windows partition the series
/// even when w does not divide n.
PaaValues paa(const Series& s, int w);

/// cuts[k-1] = Phi^-1(k/a) for k = 1..a-1, exactly antisymmetric about 0.
Breakpoints gaussian_breakpoints(int a);

/// Assigns each PAA value the count of cut points strictly below it; a
/// value equal to a cut takes the lower segment.
SaxWord sax_word(const PaaValues& p, const Breakpoints& b);

/// Expands window means back to the source length.
Series reconstruct_paa(const PaaValues& p);

/// Expands symbol digits (0..25) to length n using the same window map as
/// reconstruct_paa. Unit scaling comes later, in the metrics pipeline.
Series reconstruct_sax(const SaxWord& word, std::size_t n);

std::string to_letters(const SaxWord& word);

/// znormalize -> paa -> sax plus both reconstructions. cfg.n must be 0 or
/// equal to the series length.
SymbolicResult symbolize(const Series& s, const SaxConfig& cfg);

} // namespace saxlab
