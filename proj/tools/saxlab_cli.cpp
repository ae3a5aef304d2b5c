#include "saxlab/correlation.hpp"
#include "saxlab/entropy.hpp"
#include "saxlab/eval.hpp"
#include "saxlab/metrics.hpp"
#include "saxlab/series.hpp"
#include "saxlab/symbolic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace saxlab;

constexpr int kExitUsage = 1;    // bad flags or unknown command
constexpr int kExitInvalid = 2;  // parameter out of range, undefined operation
constexpr int kExitIo = 3;       // unreadable input, failed write
constexpr int kExitInternal = 4; // anything unexpected

const char* kExitFooter =
    "Exit codes:\n"
    "  0  success\n"
    "  1  command-line usage error\n"
    "  2  invalid parameter or undefined operation on the data\n"
    "  3  input/output failure\n"
    "  4  internal error";

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    std::array<char, 32> buf;
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), end);
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path dir = path.parent_path();
    const fs::path tmp = (dir.empty() ? fs::path(".") : dir) / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) throw io_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw io_error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

/// Writes to --output atomically, or to stdout when no path was given.
void emit(const std::string& content, const std::string& output) {
    if (output.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    atomic_write(output, content);
}

// ---------------------------------------------------------------------------
// input sources

struct SourceOptions {
    std::string input;
    std::string synthetic;
    int samples = 1;
    int length = 128;
    std::uint64_t seed = 42;
    double period = 32.0;
    double phi = 0.7;
};

Dataset make_synthetic(const SourceOptions& src) {
    if (src.samples < 1) throw std::invalid_argument("--samples must be at least 1");
    if (src.length < 2) throw std::invalid_argument("--length must be at least 2");
    if (src.synthetic == "sine" && !(src.period > 0.0))
        throw std::invalid_argument("--period must be positive");
    if (src.synthetic == "ar1" && !(std::abs(src.phi) < 1.0))
        throw std::invalid_argument("--phi must satisfy |phi| < 1");

    Dataset ds;
    ds.name = "synthetic-" + src.synthetic;
    ds.series_length = static_cast<std::size_t>(src.length);
    std::mt19937_64 rng(src.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int j = 0; j < src.samples; ++j) {
        Series s(ds.series_length);
        if (src.synthetic == "noise") {
            for (double& v : s) v = unit(rng);
        } else if (src.synthetic == "sine") {
            const double phase = 2.0 * std::numbers::pi * unit(rng);
            for (std::size_t i = 0; i < s.size(); ++i)
                s[i] = std::sin(2.0 * std::numbers::pi * static_cast<double>(i) / src.period +
                                phase);
        } else {
            double x = gauss(rng) / std::sqrt(1.0 - src.phi * src.phi);
            for (double& v : s) {
                v = x;
                x = src.phi * x + gauss(rng);
            }
        }
        ds.samples.push_back(std::move(s));
        ds.labels.push_back(1.0);
    }
    return ds;
}

Dataset load_source(const SourceOptions& src) {
    if (!src.input.empty()) return load_dataset(src.input);
    return make_synthetic(src);
}

void add_source_flags(CLI::App* cmd, SourceOptions& src) {
    auto* source = cmd->add_option_group("source", "where the series come from");
    source->add_option("--input", src.input,
                       "Dataset file: one series per row, label first, tab or comma delimited");
    source->add_option("--synthetic", src.synthetic, "Generate input: noise, sine or ar1")
        ->check(CLI::IsMember({"noise", "sine", "ar1"}));
    source->require_option(1);
    cmd->add_option("--samples", src.samples, "Synthetic sample count (default 1)");
    cmd->add_option("--length", src.length, "Synthetic series length (default 128)");
    cmd->add_option("--seed", src.seed, "Generator seed; the fixed default keeps runs repeatable");
    cmd->add_option("--period", src.period, "Sine period in samples (default 32)");
    cmd->add_option("--phi", src.phi, "AR(1) coefficient, |phi| < 1 (default 0.7)");
}

void append_source(ordered_json& config, const SourceOptions& src) {
    if (!src.input.empty()) {
        config["input"] = src.input;
        return;
    }
    ordered_json syn;
    syn["kind"] = src.synthetic;
    syn["samples"] = src.samples;
    syn["length"] = src.length;
    syn["seed"] = src.seed;
    if (src.synthetic == "sine") syn["period"] = src.period;
    if (src.synthetic == "ar1") syn["phi"] = src.phi;
    config["synthetic"] = syn;
}

// ---------------------------------------------------------------------------
// shared pieces

/// (w, a) from flags, falling back to the stored benchmark parameters for
/// the dataset's name. Missing pieces are an error.
SaxConfig resolve_config(const Dataset& ds, int w, int a) {
    const std::optional<SaxConfig> preset = benchmark_parameters(ds.name);
    SaxConfig cfg;
    cfg.n = static_cast<int>(ds.series_length);
    cfg.w = w != 0 ? w : preset ? preset->w : 0;
    cfg.a = a != 0 ? a : preset ? preset->a : 0;
    if (cfg.w == 0 || cfg.a == 0)
        throw std::invalid_argument("no stored parameters for dataset '" + ds.name +
                                    "': pass --w and --a");
    validate(cfg);
    return cfg;
}

/// Same, but absent flags mean "skip the symbolic representations".
std::optional<SaxConfig> maybe_config(const Dataset& ds, int w, int a) {
    if (w == 0 && a == 0) return std::nullopt;
    return resolve_config(ds, w, a);
}

Binning parse_binning(const std::string& text) {
    if (text == "uniform") return Binning::uniform;
    return Binning::quantile;
}

/// "K" or "LO..HI", inclusive.
std::vector<int> parse_range(const std::string& text, const char* flag) {
    const auto parse_int = [&](std::string_view sv) {
        int v = 0;
        const auto [end, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
        if (ec != std::errc{} || end != sv.data() + sv.size())
            throw std::invalid_argument(std::string(flag) + ": expected K or LO..HI, got '" +
                                        text + "'");
        return v;
    };
    const std::string_view sv(text);
    const auto sep = sv.find("..");
    int lo = 0, hi = 0;
    if (sep == std::string_view::npos) {
        lo = hi = parse_int(sv);
    } else {
        lo = parse_int(sv.substr(0, sep));
        hi = parse_int(sv.substr(sep + 2));
    }
    if (lo > hi)
        throw std::invalid_argument(std::string(flag) + ": empty range '" + text + "'");
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

ordered_json metrics_json(const MetricsRecord& m) {
    ordered_json j;
    j["info_loss"] = m.info_loss;
    j["kl"] = m.kl;
    j["info_loss_std"] = m.info_loss_std;
    j["kl_std"] = m.kl_std;
    j["iec"] = m.iec;
    return j;
}

const char* binning_name(Binning b) {
    return b == Binning::quantile ? "quantile" : "uniform";
}

// ---------------------------------------------------------------------------
// symbolize

struct SymbolizeOptions {
    SourceOptions src;
    int w = 0;
    int a = 0;
    bool recon = false;
    std::string output;
    std::string format = "json";
};

void run_symbolize(const SymbolizeOptions& o) {
    const Dataset ds = load_source(o.src);
    const SaxConfig cfg = resolve_config(ds, o.w, o.a);
    std::vector<SymbolicResult> results;
    results.reserve(ds.samples.size());
    for (const Series& s : ds.samples) results.push_back(symbolize(s, cfg));

    if (o.format == "csv") {
        std::string out;
        if (o.recon) {
            out += "sample,position,original,paa,sax\n";
            for (std::size_t i = 0; i < results.size(); ++i) {
                const Series orig = scale_unit(ds.samples[i]);
                const Series paa_r = scale_unit(results[i].paa_recon);
                const Series sax_r = scale_unit(results[i].sax_recon);
                for (std::size_t k = 0; k < orig.size(); ++k) {
                    out += std::to_string(i) + ',' + std::to_string(k) + ',' +
                           format_double(orig[k]) + ',' + format_double(paa_r[k]) + ',' +
                           format_double(sax_r[k]) + '\n';
                }
            }
        } else {
            out += "index,label,word\n";
            for (std::size_t i = 0; i < results.size(); ++i)
                out += std::to_string(i) + ',' + format_double(ds.labels[i]) + ',' +
                       to_letters(results[i].word) + '\n';
        }
        emit(out, o.output);
        return;
    }

    ordered_json j;
    ordered_json config;
    config["command"] = "symbolize";
    append_source(config, o.src);
    config["dataset"] = ds.name;
    config["n"] = cfg.n;
    config["w"] = cfg.w;
    config["a"] = cfg.a;
    config["recon"] = o.recon;
    j["config"] = config;
    ordered_json samples = ordered_json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
        ordered_json row;
        row["index"] = i;
        row["label"] = ds.labels[i];
        row["word"] = to_letters(results[i].word);
        if (o.recon) {
            row["original"] = scale_unit(ds.samples[i]);
            row["paa"] = scale_unit(results[i].paa_recon);
            row["sax"] = scale_unit(results[i].sax_recon);
        }
        samples.push_back(std::move(row));
    }
    j["samples"] = samples;
    emit(j.dump(2), o.output);
}

// ---------------------------------------------------------------------------
// metrics

struct MetricsOptions {
    SourceOptions src;
    int w = 0;
    int a = 0;
    std::string binning = "quantile";
    std::string output;
    std::string format = "json";
};

void run_metrics(const MetricsOptions& o) {
    const Dataset ds = load_source(o.src);
    const SaxConfig cfg = resolve_config(ds, o.w, o.a);
    const Binning binning = parse_binning(o.binning);

    std::vector<MetricsRecord> sax(ds.samples.size()), paa(ds.samples.size());
    for (std::size_t i = 0; i < ds.samples.size(); ++i) {
        const SymbolicResult r = symbolize(ds.samples[i], cfg);
        sax[i] = iec_for_representation(ds.samples[i], r.sax_recon, cfg.a, binning);
        paa[i] = iec_for_representation(ds.samples[i], r.paa_recon, cfg.a, binning);
    }
    const auto mean_of = [&](const std::vector<MetricsRecord>& v, double MetricsRecord::*field) {
        double sum = 0.0;
        for (const MetricsRecord& m : v) sum += m.*field;
        return sum / static_cast<double>(v.size());
    };
    const auto mean_record = [&](const std::vector<MetricsRecord>& v) {
        MetricsRecord m;
        m.info_loss = mean_of(v, &MetricsRecord::info_loss);
        m.kl = mean_of(v, &MetricsRecord::kl);
        m.info_loss_std = mean_of(v, &MetricsRecord::info_loss_std);
        m.kl_std = mean_of(v, &MetricsRecord::kl_std);
        m.iec = mean_of(v, &MetricsRecord::iec);
        return m;
    };

    if (o.format == "csv") {
        std::string out = "index,label,representation,info_loss,kl,info_loss_std,kl_std,iec\n";
        const auto row = [&](std::size_t i, const char* rep, const MetricsRecord& m) {
            out += std::to_string(i) + ',' + format_double(ds.labels[i]) + ',' + rep + ',' +
                   format_double(m.info_loss) + ',' + format_double(m.kl) + ',' +
                   format_double(m.info_loss_std) + ',' + format_double(m.kl_std) + ',' +
                   format_double(m.iec) + '\n';
        };
        for (std::size_t i = 0; i < ds.samples.size(); ++i) {
            row(i, "sax", sax[i]);
            row(i, "paa", paa[i]);
        }
        emit(out, o.output);
        return;
    }

    ordered_json j;
    ordered_json config;
    config["command"] = "metrics";
    append_source(config, o.src);
    config["dataset"] = ds.name;
    config["n"] = cfg.n;
    config["w"] = cfg.w;
    config["a"] = cfg.a;
    config["binning"] = binning_name(binning);
    config["kl_smoothing"] = "add-one";
    config["log_base"] = "e";
    j["config"] = config;
    ordered_json samples = ordered_json::array();
    for (std::size_t i = 0; i < ds.samples.size(); ++i) {
        ordered_json row;
        row["index"] = i;
        row["label"] = ds.labels[i];
        row["sax"] = metrics_json(sax[i]);
        row["paa"] = metrics_json(paa[i]);
        samples.push_back(std::move(row));
    }
    j["samples"] = samples;
    ordered_json agg;
    agg["sax"] = metrics_json(mean_record(sax));
    agg["paa"] = metrics_json(mean_record(paa));
    j["aggregates"] = agg;
    emit(j.dump(2), o.output);
}

// ---------------------------------------------------------------------------
// pe

struct PeOptions {
    SourceOptions src;
    std::string orders = "3";
    std::string delays = "1";
    int w = 0;
    int a = 0;
    std::string output;
    std::string format = "csv";
};

void run_pe(const PeOptions& o) {
    const Dataset ds = load_source(o.src);
    const std::vector<int> orders = parse_range(o.orders, "--orders");
    const std::vector<int> delays = parse_range(o.delays, "--delays");
    for (int n : orders)
        if (n < 2 || n > 7)
            throw std::invalid_argument("--orders: supported embedding orders are 2..7");
    for (int t : delays)
        if (t < 1) throw std::invalid_argument("--delays: delays start at 1");
    const std::optional<SaxConfig> cfg = maybe_config(ds, o.w, o.a);

    struct PeRow {
        std::size_t sample;
        const char* rep;
        PePoint pt;
    };
    std::vector<PeRow> rows;
    for (std::size_t i = 0; i < ds.samples.size(); ++i) {
        for (const PePoint& pt : pe_profile(ds.samples[i], orders, delays))
            rows.push_back({i, "raw", pt});
        if (cfg) {
            const SymbolicResult r = symbolize(ds.samples[i], *cfg);
            const Series word_series(r.word.symbols.begin(), r.word.symbols.end());
            for (const PePoint& pt : pe_profile(word_series, orders, delays))
                rows.push_back({i, "sax", pt});
        }
    }

    if (o.format == "csv") {
        std::string out = "sample,representation,order,delay,pe,entropy_nats,reliable\n";
        for (const PeRow& r : rows)
            out += std::to_string(r.sample) + ',' + r.rep + ',' +
                   std::to_string(r.pt.spec.order) + ',' + std::to_string(r.pt.spec.delay) + ',' +
                   format_double(r.pt.value) + ',' + format_double(r.pt.raw) + ',' +
                   (r.pt.reliable ? "true" : "false") + '\n';
        emit(out, o.output);
        return;
    }

    ordered_json j;
    ordered_json config;
    config["command"] = "pe";
    append_source(config, o.src);
    config["dataset"] = ds.name;
    config["orders"] = orders;
    config["delays"] = delays;
    if (cfg) {
        config["w"] = cfg->w;
        config["a"] = cfg->a;
    }
    j["config"] = config;
    ordered_json points = ordered_json::array();
    for (const PeRow& r : rows) {
        ordered_json row;
        row["sample"] = r.sample;
        row["representation"] = r.rep;
        row["order"] = r.pt.spec.order;
        row["delay"] = r.pt.spec.delay;
        row["pe"] = r.pt.value;
        row["entropy_nats"] = r.pt.raw;
        row["reliable"] = r.pt.reliable;
        points.push_back(std::move(row));
    }
    j["points"] = points;
    emit(j.dump(2), o.output);
}

// ---------------------------------------------------------------------------
// acf

struct AcfOptions {
    SourceOptions src;
    int max_lag = 0;
    bool include_lag0 = false;
    int w = 0;
    int a = 0;
    std::string output;
    std::string format = "csv";
};

void run_acf(const AcfOptions& o) {
    const Dataset ds = load_source(o.src);
    const int lag = o.max_lag > 0 ? o.max_lag : default_max_lag(ds.series_length);
    const std::optional<SaxConfig> cfg = maybe_config(ds, o.w, o.a);

    struct AcfRow {
        std::size_t sample;
        const char* rep;
        CorrelogramResult cg;
    };
    std::vector<AcfRow> rows;
    const auto push = [&](std::size_t i, const char* rep, const Series& s) {
        try {
            rows.push_back({i, rep, correlogram(s, lag, o.include_lag0)});
        } catch (const std::domain_error&) {
            std::cerr << "saxlab: sample " << i << " (" << rep
                      << "): constant series, correlogram skipped\n";
        }
    };
    for (std::size_t i = 0; i < ds.samples.size(); ++i) {
        push(i, "raw", ds.samples[i]);
        if (cfg) {
            const SymbolicResult r = symbolize(ds.samples[i], *cfg);
            push(i, "sax", r.sax_recon);
            push(i, "paa", r.paa_recon);
        }
    }

    if (o.format == "csv") {
        std::string out = "sample,representation,lag,acf,pacf,abs_mean_acf,conf_band\n";
        for (const AcfRow& r : rows)
            for (std::size_t k = 0; k < r.cg.acf.size(); ++k)
                out += std::to_string(r.sample) + ',' + r.rep + ',' + std::to_string(k) + ',' +
                       format_double(r.cg.acf[k]) + ',' + format_double(r.cg.pacf[k]) + ',' +
                       format_double(r.cg.abs_mean_acf) + ',' + format_double(r.cg.conf_band) +
                       '\n';
        emit(out, o.output);
        return;
    }

    ordered_json j;
    ordered_json config;
    config["command"] = "acf";
    append_source(config, o.src);
    config["dataset"] = ds.name;
    config["max_lag"] = lag;
    config["include_lag0"] = o.include_lag0;
    if (cfg) {
        config["w"] = cfg->w;
        config["a"] = cfg->a;
    }
    j["config"] = config;
    ordered_json grams = ordered_json::array();
    for (const AcfRow& r : rows) {
        ordered_json row;
        row["sample"] = r.sample;
        row["representation"] = r.rep;
        row["abs_mean_acf"] = r.cg.abs_mean_acf;
        row["conf_band"] = r.cg.conf_band;
        row["acf"] = r.cg.acf;
        row["pacf"] = r.cg.pacf;
        grams.push_back(std::move(row));
    }
    j["correlograms"] = grams;
    emit(j.dump(2), o.output);
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateOptions {
    std::string input;
    std::string test;
    int w = 0;
    int a = 0;
    std::string binning = "quantile";
    int max_lag = 0;
    bool include_lag0 = false;
    int subwindow = 0;
    std::string output;
};

void run_evaluate(const EvaluateOptions& o) {
    const Dataset train = load_dataset(o.input);
    std::optional<Dataset> test;
    if (!o.test.empty()) test = load_dataset(o.test);
    const SaxConfig cfg = resolve_config(train, o.w, o.a);

    AnalyzeOptions ao;
    ao.binning = parse_binning(o.binning);
    ao.max_lag = o.max_lag;
    ao.include_lag0 = o.include_lag0;
    ao.subwindow = o.subwindow;
    ao.test = test ? &*test : nullptr;
    const DatasetReport report = analyze_dataset(train, cfg, ao);
    emit(report_to_json(report), o.output);
}

// ---------------------------------------------------------------------------
// regress

struct RegressOptions {
    std::string pairs;
    bool include_clinical = false;
    std::string output;
    std::string format = "text";
};

struct PairPoint {
    std::string dataset;
    double x = 0.0;
    double y = 0.0;
};

std::vector<std::string> split_line(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = line.find(delim, start);
        std::string f = line.substr(start, end == std::string::npos ? end : end - start);
        while (!f.empty() && (f.back() == '\r' || f.back() == ' ')) f.pop_back();
        while (!f.empty() && f.front() == ' ') f.erase(f.begin());
        fields.push_back(std::move(f));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return fields;
}

std::string lowercase(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

/// Header-addressed CSV with at least dataset, sax_iec, err_sax and
/// err_raw columns; yields (x = sax_iec, y = err_sax / err_raw) points.
std::vector<PairPoint> load_pairs(const std::string& path, bool include_clinical) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw io_error(path + ": empty file");
    const char delim = line.find('\t') != std::string::npos ? '\t' : ',';

    const std::vector<std::string> header = split_line(line, delim);
    const auto column = [&](const char* name) {
        for (std::size_t k = 0; k < header.size(); ++k)
            if (lowercase(header[k]) == name) return k;
        throw io_error(path + ": header lacks required column '" + name + '\'');
    };
    const std::size_t col_name = column("dataset");
    const std::size_t col_x = column("sax_iec");
    const std::size_t col_err_sax = column("err_sax");
    const std::size_t col_err_raw = column("err_raw");

    const auto number = [&](const std::string& field, std::size_t row) {
        double v = 0.0;
        const char* begin = field.data();
        const char* end = begin + field.size();
        const auto [p, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc{} || p != end || !std::isfinite(v))
            throw io_error(path + ": row " + std::to_string(row) + ": bad number '" + field +
                           '\'');
        return v;
    };

    std::vector<PairPoint> points;
    for (std::size_t row = 2; std::getline(in, line); ++row) {
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> fields = split_line(line, delim);
        if (fields.size() <= std::max({col_name, col_x, col_err_sax, col_err_raw}))
            throw io_error(path + ": row " + std::to_string(row) + ": too few columns");
        PairPoint p;
        p.dataset = fields[col_name];
        if (!include_clinical && lowercase(p.dataset).starts_with("clinical")) continue;
        p.x = number(fields[col_x], row);
        const double err_sax = number(fields[col_err_sax], row);
        const double err_raw = number(fields[col_err_raw], row);
        if (err_raw == 0.0)
            throw io_error(path + ": row " + std::to_string(row) +
                           ": err_raw is zero, error ratio undefined");
        p.y = err_sax / err_raw;
        points.push_back(std::move(p));
    }
    return points;
}

void run_regress(const RegressOptions& o) {
    const std::vector<PairPoint> points = load_pairs(o.pairs, o.include_clinical);
    std::vector<double> xs, ys;
    for (const PairPoint& p : points) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    const RegressionFit fit = quad_regression_origin(xs, ys);

    if (o.format == "json") {
        ordered_json j;
        ordered_json config;
        config["command"] = "regress";
        config["pairs"] = o.pairs;
        config["include_clinical"] = o.include_clinical;
        config["points"] = points.size();
        j["config"] = config;
        ordered_json pts = ordered_json::array();
        for (const PairPoint& p : points) {
            ordered_json row;
            row["dataset"] = p.dataset;
            row["x"] = p.x;
            row["y"] = p.y;
            pts.push_back(std::move(row));
        }
        j["points"] = pts;
        ordered_json f;
        f["b1"] = fit.b1;
        f["b2"] = fit.b2;
        f["r_squared"] = fit.r_squared;
        j["fit"] = f;
        emit(j.dump(2), o.output);
        return;
    }

    char buf[256];
    std::string out = "fit: y = b1*x + b2*x^2 (through the origin)\n";
    out += "points: " + std::to_string(points.size()) + '\n';
    std::snprintf(buf, sizeof buf, "b1 = %.6f\n", fit.b1);
    out += buf;
    std::snprintf(buf, sizeof buf, "b2 = %.6f\n", fit.b2);
    out += buf;
    std::snprintf(buf, sizeof buf, "R^2 = %.6f\n", fit.r_squared);
    out += buf;
    emit(out, o.output);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic time-series toolkit: SAX/PAA words, reconstruction scores,\n"
                 "permutation entropy, correlograms and classification benchmarks."};
    app.require_subcommand(1);
    app.footer(kExitFooter);
    app.set_version_flag("--version", "saxlab 0.1.0");

    SymbolizeOptions sym;
    auto* c_sym = app.add_subcommand("symbolize", "Convert each series to its SAX word");
    add_source_flags(c_sym, sym.src);
    c_sym->add_option("--w", sym.w, "Word length (default: stored benchmark parameters)");
    c_sym->add_option("--a", sym.a, "Alphabet size, 2..26");
    c_sym->add_flag("--recon", sym.recon, "Also emit unit-scaled original/PAA/SAX curves");
    c_sym->add_option("--output", sym.output, "Write here instead of stdout (atomic)");
    c_sym->add_option("--format", sym.format, "json or csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    c_sym->callback([&]() { run_symbolize(sym); });

    MetricsOptions met;
    auto* c_met = app.add_subcommand(
        "metrics", "Score SAX and PAA reconstructions: info loss, KL divergence, IEC");
    add_source_flags(c_met, met.src);
    c_met->add_option("--w", met.w, "Word length (default: stored benchmark parameters)");
    c_met->add_option("--a", met.a, "Alphabet size, 2..26");
    c_met->add_option("--binning", met.binning,
                      "Histogram bins for the KL term: quantile or uniform (default quantile)")
        ->check(CLI::IsMember({"quantile", "uniform"}));
    c_met->add_option("--output", met.output, "Write here instead of stdout (atomic)");
    c_met->add_option("--format", met.format, "json or csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    c_met->callback([&]() { run_metrics(met); });

    PeOptions pe;
    auto* c_pe = app.add_subcommand("pe", "Permutation-entropy grid over orders and delays");
    add_source_flags(c_pe, pe.src);
    c_pe->add_option("--orders", pe.orders, "Embedding orders, K or LO..HI in 2..7 (default 3)");
    c_pe->add_option("--delays", pe.delays, "Embedding delays, K or LO..HI (default 1)");
    c_pe->add_option("--w", pe.w, "With --a: also profile the SAX words");
    c_pe->add_option("--a", pe.a, "Alphabet size for the SAX profile");
    c_pe->add_option("--output", pe.output, "Write here instead of stdout (atomic)");
    c_pe->add_option("--format", pe.format, "csv or json (default csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    c_pe->callback([&]() { run_pe(pe); });

    AcfOptions acf;
    auto* c_acf =
        app.add_subcommand("acf", "Correlogram: ACF, PACF and mean absolute autocorrelation");
    add_source_flags(c_acf, acf.src);
    c_acf->add_option("--max-lag", acf.max_lag,
                      "Highest lag (default: min(n-2, floor(10*log10 n)))");
    c_acf->add_flag("--include-lag0", acf.include_lag0,
                    "Count lag 0 in the absolute-mean summary");
    c_acf->add_option("--w", acf.w, "With --a: also correlate the SAX/PAA reconstructions");
    c_acf->add_option("--a", acf.a, "Alphabet size for the reconstructions");
    c_acf->add_option("--output", acf.output, "Write here instead of stdout (atomic)");
    c_acf->add_option("--format", acf.format, "csv or json (default csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    c_acf->callback([&]() { run_acf(acf); });

    EvaluateOptions ev;
    auto* c_ev = app.add_subcommand(
        "evaluate", "Full dataset report: words, scores, correlograms, 1NN error rates");
    c_ev->add_option("--input", ev.input, "Training dataset, label-first rows")->required();
    c_ev->add_option("--test", ev.test, "Test dataset; enables the 1NN error rates");
    c_ev->add_option("--w", ev.w, "Word length (default: stored benchmark parameters)");
    c_ev->add_option("--a", ev.a, "Alphabet size, 2..26");
    c_ev->add_option("--binning", ev.binning, "quantile or uniform (default quantile)")
        ->check(CLI::IsMember({"quantile", "uniform"}));
    c_ev->add_option("--max-lag", ev.max_lag,
                     "Highest lag (default: min(n-2, floor(10*log10 n)))");
    c_ev->add_flag("--include-lag0", ev.include_lag0,
                   "Count lag 0 in the absolute-mean summary");
    c_ev->add_option("--subwindow", ev.subwindow,
                     "Bag-of-patterns window length (default: n/4 rounded)");
    c_ev->add_option("--output", ev.output, "Write the JSON report here (atomic)");
    c_ev->callback([&]() { run_evaluate(ev); });

    RegressOptions re;
    auto* c_re = app.add_subcommand(
        "regress", "Quadratic through-origin fit of error ratio against SAX IEC");
    c_re->add_option("--pairs", re.pairs,
                     "CSV with dataset,sax_iec,err_sax,err_raw columns (header addressed)")
        ->required();
    c_re->add_flag("--include-clinical", re.include_clinical,
                   "Keep rows whose dataset name starts with 'clinical'");
    c_re->add_option("--output", re.output, "Write here instead of stdout (atomic)");
    c_re->add_option("--format", re.format, "text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    c_re->callback([&]() { run_regress(re); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const io_error& e) {
        std::cerr << "saxlab: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "saxlab: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "saxlab: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "saxlab: internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
