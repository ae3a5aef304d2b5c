#include "saxlab/eval.hpp"

#include "saxlab/parallel.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

namespace saxlab {

namespace {

std::string normalize_name(std::string_view name) {
    std::string out;
    for (char c : name)
        if (std::isalnum(static_cast<unsigned char>(c)))
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

std::string dataset_name_from_path(const std::filesystem::path& path) {
    std::string stem = path.stem().string();
    for (const char* suffix : {"_TRAIN", "_TEST", "_train", "_test"}) {
        if (stem.size() > std::strlen(suffix) && stem.ends_with(suffix)) {
            stem.resize(stem.size() - std::strlen(suffix));
            break;
        }
    }
    return stem;
}

double parse_field(std::string_view field, std::size_t row, const std::string& name) {
    // trim surrounding spaces (UCR exports often pad columns)
    while (!field.empty() && (field.front() == ' ' || field.front() == '\r')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\r')) field.remove_suffix(1);
    if (field.empty())
        throw io_error(name + ": empty field in row " + std::to_string(row));
    double value = 0.0;
    const auto result = std::from_chars(field.data(), field.data() + field.size(), value);
    if (result.ec != std::errc() || result.ptr != field.data() + field.size())
        throw io_error(name + ": non-numeric value '" + std::string(field) + "' in row " +
                       std::to_string(row));
    if (!std::isfinite(value))
        throw io_error(name + ": non-finite value in row " + std::to_string(row));
    return value;
}

double squared_distance(const Series& a, const Series& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

double bop_squared_distance(const BopHistogram& a, const BopHistogram& b) {
    double sum = 0.0;
    auto ia = a.counts.begin();
    auto ib = b.counts.begin();
    while (ia != a.counts.end() || ib != b.counts.end()) {
        double d = 0.0;
        if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
            d = static_cast<double>(ia->second);
            ++ia;
        } else if (ia == a.counts.end() || ib->first < ia->first) {
            d = static_cast<double>(ib->second);
            ++ib;
        } else {
            d = static_cast<double>(ia->second - ib->second);
            ++ia;
            ++ib;
        }
        sum += d * d;
    }
    return sum;
}

// shared 1NN driver: dist(i, j) scores test i against train j
template <typename DistFn>
double nn1_error_rate(std::size_t train_count, std::span<const double> train_labels,
                      std::size_t test_count, std::span<const double> test_labels,
                      DistFn&& dist) {
    std::vector<double> predicted(test_count);
    parallel_for(test_count, [&](std::size_t i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = 0;
        for (std::size_t j = 0; j < train_count; ++j) {
            const double d = dist(i, j);
            if (d < best) { // strict: ties keep the lowest training index
                best = d;
                best_j = j;
            }
        }
        predicted[i] = train_labels[best_j];
    });
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < test_count; ++i)
        if (predicted[i] != test_labels[i]) ++wrong;
    return static_cast<double>(wrong) / static_cast<double>(test_count);
}

} // namespace

Dataset load_dataset(std::istream& in, std::string name) {
    Dataset ds;
    ds.name = std::move(name);

    std::string line;
    std::size_t row = 0;
    char delimiter = '\0';
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        if (delimiter == '\0')
            delimiter = line.find('\t') != std::string::npos ? '\t' : ',';

        std::vector<double> fields;
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t end = line.find(delimiter, start);
            if (end == std::string::npos) end = line.size();
            fields.push_back(parse_field(
                std::string_view(line).substr(start, end - start), row, ds.name));
            start = end + 1;
        }
        if (fields.size() < 2)
            throw io_error(ds.name + ": row " + std::to_string(row) +
                           " has no series values after the label");

        Series sample(fields.begin() + 1, fields.end());
        if (ds.samples.empty()) {
            ds.series_length = sample.size();
        } else if (sample.size() != ds.series_length) {
            throw io_error(ds.name + ": row " + std::to_string(row) + " has " +
                           std::to_string(sample.size()) + " values, expected " +
                           std::to_string(ds.series_length));
        }
        ds.labels.push_back(fields.front());
        ds.samples.push_back(std::move(sample));
    }
    if (ds.samples.empty()) throw io_error(ds.name + ": no data rows");
    return ds;
}

Dataset load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open dataset file: " + path.string());
    return load_dataset(in, dataset_name_from_path(path));
}

std::optional<SaxConfig> benchmark_parameters(std::string_view dataset_name) {
    static const std::map<std::string, SaxConfig, std::less<>> presets = {
        {"ecg", {96, 12, 7}},       {"ecg200", {96, 12, 7}},
        {"lighting2", {637, 18, 7}}, {"coffee", {286, 48, 7}},
        {"adiac", {176, 25, 9}},     {"lighting7", {319, 11, 9}},
        {"beef", {470, 11, 5}},      {"oliveoil", {570, 26, 7}},
    };
    const auto it = presets.find(normalize_name(dataset_name));
    if (it == presets.end()) return std::nullopt;
    return it->second;
}

double nn1_euclidean(const Dataset& train, const Dataset& test) {
    if (train.samples.empty()) throw std::invalid_argument("nn1_euclidean: empty training set");
    if (test.samples.empty()) throw std::invalid_argument("nn1_euclidean: empty test set");
    if (train.series_length != test.series_length)
        throw std::invalid_argument("nn1_euclidean: train/test series lengths differ");
    return nn1_error_rate(
        train.samples.size(), train.labels, test.samples.size(), test.labels,
        [&](std::size_t i, std::size_t j) {
            return squared_distance(test.samples[i], train.samples[j]);
        });
}

int default_bop_subwindow(std::size_t n) {
    return static_cast<int>(std::lround(static_cast<double>(n) / 4.0));
}

BopHistogram sax_bop(const Series& s, const SaxConfig& cfg, int subwindow) {
    if (subwindow < 1 || static_cast<std::size_t>(subwindow) > s.size())
        throw std::invalid_argument("sax_bop: subwindow must be in [1, series length]");
    if (cfg.w > subwindow)
        throw std::invalid_argument(
            "sax_bop: word length w exceeds the subwindow; shrink w or grow the subwindow");
    SaxConfig window_cfg{subwindow, cfg.w, cfg.a};
    validate(window_cfg);
    const Breakpoints cuts = gaussian_breakpoints(cfg.a);

    BopHistogram bop;
    std::string previous;
    Series window(static_cast<std::size_t>(subwindow));
    for (std::size_t start = 0; start + window.size() <= s.size(); ++start) {
        std::copy_n(s.begin() + static_cast<std::ptrdiff_t>(start), window.size(),
                    window.begin());
        const std::string word = to_letters(sax_word(paa(znormalize(window), cfg.w), cuts));
        if (word == previous) continue; // numerosity reduction
        ++bop.counts[word];
        ++bop.total;
        previous = word;
    }
    return bop;
}

double nn1_bop(const Dataset& train, const Dataset& test, const SaxConfig& cfg, int subwindow) {
    if (train.samples.empty()) throw std::invalid_argument("nn1_bop: empty training set");
    if (test.samples.empty()) throw std::invalid_argument("nn1_bop: empty test set");

    std::vector<BopHistogram> train_bop(train.samples.size());
    std::vector<BopHistogram> test_bop(test.samples.size());
    parallel_for(train.samples.size(), [&](std::size_t i) {
        train_bop[i] = sax_bop(train.samples[i], cfg, subwindow);
    });
    parallel_for(test.samples.size(), [&](std::size_t i) {
        test_bop[i] = sax_bop(test.samples[i], cfg, subwindow);
    });

    return nn1_error_rate(
        train.samples.size(), train.labels, test.samples.size(), test.labels,
        [&](std::size_t i, std::size_t j) {
            return bop_squared_distance(test_bop[i], train_bop[j]);
        });
}

RegressionFit quad_regression_origin(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("quad_regression_origin: xs/ys length mismatch");
    if (xs.size() < 3)
        throw std::invalid_argument("quad_regression_origin: need at least 3 points");

    // normal equations for the basis (x, x^2)
    double s2 = 0.0, s3 = 0.0, s4 = 0.0, t1 = 0.0, t2 = 0.0, yy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i], y = ys[i], x2 = x * x;
        s2 += x2;
        s3 += x2 * x;
        s4 += x2 * x2;
        t1 += x * y;
        t2 += x2 * y;
        yy += y * y;
    }
    const double det = s2 * s4 - s3 * s3;
    const double scale = std::max(s2 * s4, s3 * s3);
    if (scale <= 0.0 || std::abs(det) <= 1e-12 * scale)
        throw std::domain_error("quad_regression_origin: collinear basis (singular normal matrix)");

    RegressionFit fit;
    fit.b1 = (t1 * s4 - t2 * s3) / det;
    fit.b2 = (t2 * s2 - t1 * s3) / det;

    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.b1 * xs[i] + fit.b2 * xs[i] * xs[i]);
        ss_res += r * r;
    }
    fit.r_squared = (yy > 0.0) ? 1.0 - ss_res / yy : 1.0;
    return fit;
}

} // namespace saxlab
