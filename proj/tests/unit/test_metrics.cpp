#include "saxlab/metrics.hpp"
#include "saxlab/series.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace saxlab;

namespace {

Histogram counts(std::vector<std::int64_t> c) {
    Histogram h;
    h.total = 0;
    for (std::int64_t v : c) h.total += v;
    h.counts = std::move(c);
    return h;
}

} // namespace

TEST_SUITE("metrics") {

TEST_CASE("info_loss is zero on identical series") {
    CHECK(info_loss({0.1, 0.9, 0.4}, {0.1, 0.9, 0.4}) == 0.0);
}

TEST_CASE("info_loss divides squared error by n-1") {
    CHECK(info_loss({0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(info_loss({0.5, 0.5}, {0.0, 1.0}) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("info_loss rejects mismatched or too-short input") {
    CHECK_THROWS_AS(info_loss({0.1}, {0.1, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(info_loss({0.1}, {0.1}), std::invalid_argument);
}

TEST_CASE("kl_divergence is zero for identical histograms") {
    CHECK(kl_divergence(counts({3, 5, 2}), counts({3, 5, 2})) == 0.0);
}

TEST_CASE("kl_divergence matches the smoothed two-bin hand computation") {
    const double kl = kl_divergence(counts({10, 0}), counts({0, 10}));
    const double expected =
        (11.0 / 12.0) * std::log(11.0) + (1.0 / 12.0) * std::log(1.0 / 11.0);
    CHECK(kl == doctest::Approx(expected).epsilon(1e-12));
    CHECK(kl == doctest::Approx(1.998).scale(1.0).epsilon(1e-3));
}

TEST_CASE("kl_divergence is asymmetric") {
    const double forward = kl_divergence(counts({3, 1}), counts({1, 3}));
    const double backward = kl_divergence(counts({1, 3}), counts({3, 1}));
    CHECK(forward > 0.0);
    CHECK(backward > 0.0);
    // equal here only by coincidence of the symmetric example; perturb
    const double f2 = kl_divergence(counts({5, 1}), counts({1, 2}));
    const double b2 = kl_divergence(counts({1, 2}), counts({5, 1}));
    CHECK(f2 != b2);
}

TEST_CASE("kl_divergence validates its inputs") {
    CHECK_THROWS_AS(kl_divergence(counts({1, 2}), counts({1, 2, 3})), std::invalid_argument);
    CHECK_THROWS_AS(kl_divergence(counts({0, 0}), counts({1, 1})), std::invalid_argument);
}

TEST_CASE("kl_divergence never goes negative under fuzzing") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> count(0, 50);
    for (int rep = 0; rep < 2000; ++rep) {
        const std::size_t bins = 2 + rng() % 7;
        std::vector<std::int64_t> p(bins), q(bins);
        for (auto& v : p) v = count(rng);
        for (auto& v : q) v = count(rng);
        p[0] += 1; // keep totals >= 1
        q[0] += 1;
        CHECK(kl_divergence(counts(p), counts(q)) >= 0.0);
    }
}

TEST_CASE("iec boundary values") {
    CHECK(iec(0.0, 0.0) == 0.0);
    CHECK(iec(0.0, 0.5) == 0.0);
    CHECK(iec(0.0, 1.0) == 0.0);
    CHECK(iec(1.0, 1.0) == 0.5);
    CHECK(iec(1.0, 0.0) == 1.0);
}

TEST_CASE("iec rejects inputs outside the unit interval") {
    CHECK_THROWS_AS(iec(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(iec(1.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(iec(0.5, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(iec(0.5, 1.1), std::invalid_argument);
}

TEST_CASE("iec is monotone in both arguments") {
    for (int ki = 0; ki <= 20; ++ki) {
        for (int li = 0; li <= 20; ++li) {
            const double k = ki / 20.0, l = li / 20.0;
            if (ki < 20) CHECK(iec(k + 0.05, l) > iec(k, l));
            if (li < 20 && k > 0.0) CHECK(iec(k, l) > iec(k, l + 0.05));
        }
    }
}

TEST_CASE("full info-loss swing halves the score") {
    for (double k : {0.2, 0.5, 0.9, 1.0})
        CHECK(iec(k, 0.0) - iec(k, 1.0) == doctest::Approx(k / 2).epsilon(1e-15));
}

TEST_CASE("iec_for_representation of a perfect reconstruction is all zero") {
    const Series s{0.3, 1.8, -0.7, 2.2, 0.0, 1.1};
    const MetricsRecord m = iec_for_representation(s, s, 4);
    CHECK(m.info_loss == 0.0);
    CHECK(m.kl == 0.0);
    CHECK(m.info_loss_std == 0.0);
    CHECK(m.kl_std == 0.0);
    CHECK(m.iec == 0.0);
}

TEST_CASE("iec_for_representation is invariant under affine rescaling") {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    Series orig(64), recon(64);
    for (std::size_t i = 0; i < 64; ++i) {
        orig[i] = dist(rng);
        recon[i] = dist(rng);
    }
    Series orig2(64), recon2(64);
    for (std::size_t i = 0; i < 64; ++i) {
        orig2[i] = 5.0 * orig[i] - 3.0;
        recon2[i] = 5.0 * recon[i] - 3.0;
    }
    const MetricsRecord a = iec_for_representation(orig, recon, 5);
    const MetricsRecord b = iec_for_representation(orig2, recon2, 5);
    CHECK(b.info_loss == doctest::Approx(a.info_loss).epsilon(1e-12));
    CHECK(b.kl == doctest::Approx(a.kl).scale(1.0).epsilon(1e-12));
    CHECK(b.iec == doctest::Approx(a.iec).scale(1.0).epsilon(1e-12));
}

TEST_CASE("record fields satisfy their defining identity under fuzzing") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int rep = 0; rep < 50; ++rep) {
        Series orig(40), recon(40);
        for (std::size_t i = 0; i < 40; ++i) {
            orig[i] = dist(rng);
            recon[i] = dist(rng);
        }
        for (Binning b : {Binning::quantile, Binning::uniform}) {
            const MetricsRecord m = iec_for_representation(orig, recon, 3, b);
            CHECK(m.info_loss >= 0.0);
            CHECK(m.kl >= 0.0);
            CHECK(m.info_loss_std >= 0.0);
            CHECK(m.info_loss_std <= 1.0);
            CHECK(m.kl_std >= 0.0);
            CHECK(m.kl_std <= 1.0);
            CHECK(m.iec == m.kl_std / (1.0 + m.info_loss_std));
        }
    }
}

TEST_CASE("a maximally separated pair drives both clamps and lands on 0.5") {
    // original: 999 zeros and a single one; reconstruction: the pointwise
    // complement. Every index is off by 1 (MSE clamps to 1) and the two
    // histograms concentrate in opposite bins (KL blows past ln a).
    const std::size_t n = 1000;
    Series orig(n, 0.0), recon(n, 1.0);
    orig[n - 1] = 1.0;
    recon[n - 1] = 0.0;
    const MetricsRecord m = iec_for_representation(orig, recon, 4);
    CHECK(m.info_loss_std == 1.0);
    CHECK(m.kl_std == 1.0);
    CHECK(m.iec == 0.5);
}

TEST_CASE("a constant reconstruction of an alternating signal scores near 0.8") {
    const std::size_t n = 1000;
    Series orig(n), recon(n, 3.0);
    for (std::size_t i = 0; i < n; ++i) orig[i] = (i % 2 == 0) ? -1.0 : 1.0;
    const MetricsRecord m = iec_for_representation(orig, recon, 4);
    CHECK(m.kl_std == 1.0);
    CHECK(m.info_loss_std == doctest::Approx(0.25).epsilon(0.01));
    CHECK(m.iec == doctest::Approx(0.8).epsilon(0.01));
}

TEST_CASE("records serialize with the exact key set in order") {
    MetricsRecord m;
    m.info_loss = 0.25;
    m.kl = 1.5;
    m.info_loss_std = 0.25;
    m.kl_std = 0.75;
    m.iec = 0.6;
    const nlohmann::ordered_json j = nlohmann::ordered_json::parse(to_json(m));
    const std::vector<std::string> expected{"info_loss", "kl", "info_loss_std", "kl_std", "iec"};
    std::vector<std::string> got;
    for (const auto& item : j.items()) got.push_back(item.key());
    CHECK(got == expected);
    CHECK(j["info_loss"].get<double>() == 0.25);
    CHECK(j["kl"].get<double>() == 1.5);
    CHECK(j["iec"].get<double>() == 0.6);
}

} // TEST_SUITE
