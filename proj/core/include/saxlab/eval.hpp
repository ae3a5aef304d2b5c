#pragma once

#include "saxlab/metrics.hpp"
#include "saxlab/series.hpp"
#include "saxlab/symbolic.hpp"

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace saxlab {

/// File-level failures while reading datasets or reports: missing files,
/// ragged rows, non-numeric fields.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A labeled collection of equal-length series.
struct Dataset {
    std::string name;
    std::vector<Series> samples;
    std::vector<double> labels;
    std::size_t series_length = 0;
};

/// Parses label-first delimited rows (`label, v1, ..., vn`); the
/// delimiter (comma or tab) is detected from the first data row. Throws
/// io_error naming the offending 1-based row on ragged or non-numeric
/// input. The dataset name is the file stem minus any _TRAIN/_TEST
/// suffix.
Dataset load_dataset(const std::filesystem::path& path);
Dataset load_dataset(std::istream& in, std::string name);

/// Table of (n, w, a) presets for the seven benchmark datasets, keyed by
/// normalized dataset name ("ecg200" resolves to the ECG row).
std::optional<SaxConfig> benchmark_parameters(std::string_view dataset_name);

/// Bag-of-patterns feature vector: counts per distinct SAX word over
/// sliding subwindows, runs of identical consecutive words counted once.
/// The sorted map keys double as the vocabulary.
struct BopHistogram {
    std::map<std::string, std::int64_t> counts;
    std::int64_t total = 0;
};

/// 1NN classification error under Euclidean distance on the raw series.
/// Distance ties resolve to the lowest training index.
double nn1_euclidean(const Dataset& train, const Dataset& test);

/// Slides a window of `subwindow` samples with stride 1, z-normalizes
/// each, takes its SAX word (cfg.w letters over cfg.a symbols) and counts
/// it, skipping repeats of the immediately preceding word.
BopHistogram sax_bop(const Series& s, const SaxConfig& cfg, int subwindow);

/// 1NN over bag-of-patterns histograms with Euclidean distance on the
/// aligned vocabulary union (absent words count 0).
double nn1_bop(const Dataset& train, const Dataset& test, const SaxConfig& cfg, int subwindow);

/// round(n/4), the reproducible subwindow default.
int default_bop_subwindow(std::size_t n);

/// Least-squares fit of y = b1*x + b2*x^2 with no intercept.
/// r_squared = 1 - SS_res / sum(y^2), the through-origin convention.
struct RegressionFit {
    double b1 = 0.0;
    double b2 = 0.0;
    double r_squared = 0.0;
};

/// Solves the 2x2 normal equations; throws std::domain_error when the
/// basis is collinear (e.g. a single repeated x).
RegressionFit quad_regression_origin(std::span<const double> xs, std::span<const double> ys);

struct AnalyzeOptions {
    Binning binning = Binning::quantile;
    int max_lag = 0;         // 0: default_max_lag(series length)
    bool include_lag0 = false;
    int subwindow = 0;       // 0: default_bop_subwindow(series length)
    const Dataset* test = nullptr; // when set, 1NN error rates are computed
};

struct SampleAnalysis {
    std::size_t index = 0;
    double label = 0.0;
    std::string word;
    MetricsRecord sax;
    MetricsRecord paa;
    // absent when the underlying sequence is constant
    std::optional<double> abs_acf_raw;
    std::optional<double> abs_acf_sax;
    std::optional<double> abs_acf_paa;
};

struct DatasetReport {
    std::string dataset;
    SaxConfig config;
    Binning binning = Binning::quantile;
    int max_lag = 0;
    bool include_lag0 = false;
    int subwindow = 0;
    std::vector<SampleAnalysis> samples;
    double mean_iec_sax = 0.0;
    double mean_iec_paa = 0.0;
    double mean_info_loss_sax = 0.0;
    double mean_info_loss_paa = 0.0;
    double mean_kl_sax = 0.0;
    double mean_kl_paa = 0.0;
    std::optional<double> mean_abs_acf_raw;
    std::optional<double> mean_abs_acf_sax;
    std::optional<double> mean_abs_acf_paa;
    std::optional<double> error_rate_raw;
    std::optional<double> error_rate_bop;
};

/// Symbolizes and scores every sample (in parallel, assembled in index
/// order) and aggregates dataset-level means; when options carry a test
/// split, adds raw-1NN and BoP-1NN error rates.
DatasetReport analyze_dataset(const Dataset& ds, const SaxConfig& cfg,
                              const AnalyzeOptions& options = {});

/// Deterministic JSON rendering with sections config, per_sample,
/// aggregates and regression.
std::string report_to_json(const DatasetReport& report);

} // namespace saxlab
