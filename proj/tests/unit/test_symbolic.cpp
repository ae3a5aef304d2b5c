#include "saxlab/series.hpp"
#include "saxlab/symbolic.hpp"

#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

using namespace saxlab;

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

Series random_series(std::mt19937_64& rng, std::size_t len) {
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    Series s(len);
    for (double& v : s) v = dist(rng);
    return s;
}

} // namespace

TEST_SUITE("symbolic") {

TEST_CASE("paa averages two equal windows") {
    const PaaValues p = paa({1.0, 2.0, 3.0, 4.0}, 2);
    REQUIRE(p.means.size() == 2);
    CHECK(p.means[0] == 1.5);
    CHECK(p.means[1] == 3.5);
    CHECK(p.source_length == 4);
}

TEST_CASE("paa with w equal to n is the identity") {
    const Series s{0.5, -1.0, 2.5, 3.0};
    const PaaValues p = paa(s, 4);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(p.means[i] == s[i]);
}

TEST_CASE("paa floor boundaries split five samples into 2 and 3") {
    const PaaValues p = paa({1.0, 2.0, 3.0, 4.0, 5.0}, 2);
    REQUIRE(p.means.size() == 2);
    CHECK(p.means[0] == 1.5);
    CHECK(p.means[1] == 4.0);
}

TEST_CASE("paa rejects impossible word counts") {
    CHECK_THROWS_AS(paa({1.0, 2.0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(paa({1.0, 2.0}, 0), std::invalid_argument);
}

TEST_CASE("floor-boundary windows partition every series") {
    // window means of the index ramp must be strictly increasing, and the
    // reconstruction must preserve the total sum: together that pins
    // non-empty, disjoint, covering windows.
    for (int n = 1; n <= 40; ++n) {
        Series ramp(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) ramp[static_cast<std::size_t>(i)] = i;
        for (int w = 1; w <= n; ++w) {
            const PaaValues p = paa(ramp, w);
            REQUIRE(p.means.size() == static_cast<std::size_t>(w));
            for (std::size_t i = 1; i < p.means.size(); ++i)
                CHECK(p.means[i] > p.means[i - 1]);
            const Series recon = reconstruct_paa(p);
            REQUIRE(recon.size() == static_cast<std::size_t>(n));
            double sum_orig = 0.0, sum_recon = 0.0;
            for (double v : ramp) sum_orig += v;
            for (double v : recon) sum_recon += v;
            CHECK(sum_recon == doctest::Approx(sum_orig).scale(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("paa preserves the mean under equal window sizes") {
    std::mt19937_64 rng(21);
    const Series s = random_series(rng, 96);
    const Series recon = reconstruct_paa(paa(s, 12));
    double mo = 0.0, mr = 0.0;
    for (double v : s) mo += v;
    for (double v : recon) mr += v;
    CHECK(mr / 96.0 == doctest::Approx(mo / 96.0).scale(1.0).epsilon(1e-9));
}

TEST_CASE("gaussian_breakpoints at a=2 is the single median cut") {
    const Breakpoints b = gaussian_breakpoints(2);
    REQUIRE(b.cuts.size() == 1);
    CHECK(b.cuts[0] == 0.0);
}

TEST_CASE("gaussian_breakpoints at a=4 hits the quartile cuts") {
    const Breakpoints b = gaussian_breakpoints(4);
    REQUIRE(b.cuts.size() == 3);
    CHECK(b.cuts[0] == doctest::Approx(-0.6745).epsilon(1e-4));
    CHECK(b.cuts[1] == 0.0);
    CHECK(b.cuts[2] == doctest::Approx(0.6745).epsilon(1e-4));
}

TEST_CASE("gaussian_breakpoints at a=7 match the inverse-CDF table") {
    const Breakpoints b = gaussian_breakpoints(7);
    const double expected[] = {-1.0676, -0.5659, -0.1800, 0.1800, 0.5659, 1.0676};
    REQUIRE(b.cuts.size() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(b.cuts[i] == doctest::Approx(expected[i]).scale(1.0).epsilon(1e-4));
}

TEST_CASE("breakpoints are increasing, antisymmetric and equiprobable") {
    for (int a = 2; a <= 26; ++a) {
        const Breakpoints b = gaussian_breakpoints(a);
        REQUIRE(b.cuts.size() == static_cast<std::size_t>(a - 1));
        for (std::size_t i = 1; i < b.cuts.size(); ++i) CHECK(b.cuts[i] > b.cuts[i - 1]);
        for (std::size_t i = 0; i < b.cuts.size(); ++i)
            CHECK(b.cuts[i] == -b.cuts[b.cuts.size() - 1 - i]);
        for (int k = 1; k < a; ++k) {
            const double cdf = normal_cdf(b.cuts[static_cast<std::size_t>(k - 1)]);
            CHECK(cdf ==
                  doctest::Approx(static_cast<double>(k) / a).scale(1.0).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(gaussian_breakpoints(1), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_breakpoints(27), std::invalid_argument);
}

TEST_CASE("normal draws land in each segment with frequency 1/a") {
    std::mt19937_64 rng(22);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int draws = 200000;
    for (int a : {3, 5, 7, 9}) {
        const Breakpoints b = gaussian_breakpoints(a);
        std::vector<int> counts(static_cast<std::size_t>(a), 0);
        for (int i = 0; i < draws; ++i) {
            const double x = gauss(rng);
            std::size_t seg = 0;
            while (seg < b.cuts.size() && x > b.cuts[seg]) ++seg;
            ++counts[seg];
        }
        for (int c : counts)
            CHECK(static_cast<double>(c) / draws ==
                  doctest::Approx(1.0 / a).scale(1.0).epsilon(0.02));
    }
}

TEST_CASE("sax_word assigns the count of cuts strictly below") {
    const Breakpoints b = gaussian_breakpoints(2);
    const SaxWord w = sax_word(PaaValues{{-2.0}, 1}, b);
    REQUIRE(w.symbols.size() == 1);
    CHECK(w.symbols[0] == 0);
    CHECK(w.alphabet == 2);
}

TEST_CASE("a PAA value sitting on a cut takes the lower segment") {
    const SaxWord w = sax_word(PaaValues{{0.0}, 1}, Breakpoints{{0.0}});
    CHECK(w.symbols[0] == 0);

    const Breakpoints b7 = gaussian_breakpoints(7);
    const SaxWord on_cuts = sax_word(PaaValues{b7.cuts, b7.cuts.size()}, b7);
    for (std::size_t i = 0; i < b7.cuts.size(); ++i)
        CHECK(on_cuts.symbols[i] == static_cast<int>(i));
}

TEST_CASE("to_letters renders symbol indices from A") {
    CHECK(to_letters(SaxWord{{2, 0, 2, 1, 1}, 3}) == "CACBB");
}

TEST_CASE("reconstruct_paa substitutes window means at full length") {
    const Series r = reconstruct_paa(PaaValues{{1.5, 3.5}, 4});
    REQUIRE(r.size() == 4);
    CHECK(r == Series{1.5, 1.5, 3.5, 3.5});
}

TEST_CASE("reconstruct_sax expands digits through the same window map") {
    const Series r = reconstruct_sax(SaxWord{{2, 0, 2, 1, 1}, 3}, 5);
    CHECK(r == Series{2.0, 0.0, 2.0, 1.0, 1.0});

    const Series single = reconstruct_sax(SaxWord{{3}, 5}, 7);
    REQUIRE(single.size() == 7);
    for (double v : single) CHECK(v == 3.0);
}

TEST_CASE("reconstruct_sax emits at most a distinct values") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        const int a = 2 + static_cast<int>(rng() % 25);
        const int w = 1 + static_cast<int>(rng() % 30);
        const int n = w + static_cast<int>(rng() % 50);
        SaxWord word;
        word.alphabet = a;
        for (int i = 0; i < w; ++i)
            word.symbols.push_back(static_cast<int>(rng() % static_cast<unsigned>(a)));
        const Series r = reconstruct_sax(word, static_cast<std::size_t>(n));
        REQUIRE(r.size() == static_cast<std::size_t>(n));
        const std::set<double> distinct(r.begin(), r.end());
        CHECK(distinct.size() <= static_cast<std::size_t>(a));
    }
}

TEST_CASE("symbolize runs the full pipeline on a ramp") {
    const SymbolicResult r = symbolize({1, 2, 3, 4, 5, 6, 7, 8}, SaxConfig{8, 4, 4});
    CHECK(to_letters(r.word) == "ABCD");
    CHECK(r.paa.means.size() == 4);
    CHECK(r.paa_recon.size() == 8);
    CHECK(r.sax_recon.size() == 8);
    CHECK(r.sax_recon.front() == 0.0);
    CHECK(r.sax_recon.back() == 3.0);
}

TEST_CASE("symbolize accepts n=0 as the series length and rejects mismatch") {
    const SymbolicResult r = symbolize({1, 2, 3, 4}, SaxConfig{0, 2, 3});
    CHECK(r.word.symbols.size() == 2);
    CHECK_THROWS_AS(symbolize({1, 2, 3, 4}, SaxConfig{5, 2, 3}), std::invalid_argument);
}

TEST_CASE("config validation enforces the parameter ranges") {
    CHECK_THROWS_AS(validate(SaxConfig{10, 11, 4}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SaxConfig{10, 0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SaxConfig{10, 5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SaxConfig{10, 5, 27}), std::invalid_argument);
    CHECK_NOTHROW(validate(SaxConfig{10, 10, 26}));
}

TEST_CASE("symbols on z-normalized white noise approach the uniform mix") {
    std::mt19937_64 rng(24);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = 20000, a = 5;
    Series s(static_cast<std::size_t>(n));
    for (double& v : s) v = gauss(rng);
    const SymbolicResult r = symbolize(s, SaxConfig{n, n, a});
    std::vector<int> counts(static_cast<std::size_t>(a), 0);
    for (int sym : r.word.symbols) ++counts[static_cast<std::size_t>(sym)];
    for (int c : counts)
        CHECK(static_cast<double>(c) / n == doctest::Approx(1.0 / a).scale(1.0).epsilon(0.05));
}

} // TEST_SUITE
