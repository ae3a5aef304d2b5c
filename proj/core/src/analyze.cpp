#include "saxlab/correlation.hpp"
#include "saxlab/eval.hpp"
#include "saxlab/parallel.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace saxlab {

namespace {

nlohmann::ordered_json json_metrics(const MetricsRecord& m) {
    nlohmann::ordered_json j;
    j["info_loss"] = m.info_loss;
    j["kl"] = m.kl;
    j["info_loss_std"] = m.info_loss_std;
    j["kl_std"] = m.kl_std;
    j["iec"] = m.iec;
    return j;
}

nlohmann::ordered_json json_optional(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

std::optional<double> safe_abs_mean_acf(const Series& s, int max_lag, bool include_lag0) {
    try {
        return abs_mean_acf(s, max_lag, include_lag0);
    } catch (const std::domain_error&) {
        return std::nullopt; // constant sequence, correlation undefined
    }
}

struct MeanAccumulator {
    double sum = 0.0;
    std::size_t count = 0;
    void add(const std::optional<double>& v) {
        if (v) {
            sum += *v;
            ++count;
        }
    }
    std::optional<double> mean() const {
        if (count == 0) return std::nullopt;
        return sum / static_cast<double>(count);
    }
};

} // namespace

DatasetReport analyze_dataset(const Dataset& ds, const SaxConfig& cfg,
                              const AnalyzeOptions& options) {
    if (ds.samples.empty()) throw std::invalid_argument("analyze_dataset: empty dataset");

    SaxConfig resolved = cfg;
    if (resolved.n == 0) resolved.n = static_cast<int>(ds.series_length);
    if (resolved.n != static_cast<int>(ds.series_length))
        throw std::invalid_argument("analyze_dataset: cfg.n does not match dataset series length");
    validate(resolved);

    DatasetReport report;
    report.dataset = ds.name;
    report.config = resolved;
    report.binning = options.binning;
    report.max_lag = options.max_lag > 0 ? options.max_lag : default_max_lag(ds.series_length);
    report.include_lag0 = options.include_lag0;
    report.subwindow =
        options.subwindow > 0 ? options.subwindow : default_bop_subwindow(ds.series_length);

    report.samples.resize(ds.samples.size());
    parallel_for(ds.samples.size(), [&](std::size_t i) {
        const Series& raw = ds.samples[i];
        const SymbolicResult sym = symbolize(raw, resolved);

        SampleAnalysis sa;
        sa.index = i;
        sa.label = ds.labels[i];
        sa.word = to_letters(sym.word);
        sa.sax = iec_for_representation(raw, sym.sax_recon, resolved.a, options.binning);
        sa.paa = iec_for_representation(raw, sym.paa_recon, resolved.a, options.binning);
        sa.abs_acf_raw = safe_abs_mean_acf(raw, report.max_lag, options.include_lag0);
        sa.abs_acf_sax = safe_abs_mean_acf(sym.sax_recon, report.max_lag, options.include_lag0);
        sa.abs_acf_paa = safe_abs_mean_acf(sym.paa_recon, report.max_lag, options.include_lag0);
        report.samples[i] = std::move(sa);
    });

    double iec_sax = 0.0, iec_paa = 0.0, loss_sax = 0.0, loss_paa = 0.0, kl_sax = 0.0,
           kl_paa = 0.0;
    MeanAccumulator acf_raw, acf_sax, acf_paa;
    for (const SampleAnalysis& sa : report.samples) {
        iec_sax += sa.sax.iec;
        iec_paa += sa.paa.iec;
        loss_sax += sa.sax.info_loss;
        loss_paa += sa.paa.info_loss;
        kl_sax += sa.sax.kl;
        kl_paa += sa.paa.kl;
        acf_raw.add(sa.abs_acf_raw);
        acf_sax.add(sa.abs_acf_sax);
        acf_paa.add(sa.abs_acf_paa);
    }
    const double count = static_cast<double>(report.samples.size());
    report.mean_iec_sax = iec_sax / count;
    report.mean_iec_paa = iec_paa / count;
    report.mean_info_loss_sax = loss_sax / count;
    report.mean_info_loss_paa = loss_paa / count;
    report.mean_kl_sax = kl_sax / count;
    report.mean_kl_paa = kl_paa / count;
    report.mean_abs_acf_raw = acf_raw.mean();
    report.mean_abs_acf_sax = acf_sax.mean();
    report.mean_abs_acf_paa = acf_paa.mean();

    if (options.test != nullptr) {
        report.error_rate_raw = nn1_euclidean(ds, *options.test);
        report.error_rate_bop = nn1_bop(ds, *options.test, resolved, report.subwindow);
    }
    return report;
}

std::string report_to_json(const DatasetReport& report) {
    nlohmann::ordered_json j;

    nlohmann::ordered_json config;
    config["dataset"] = report.dataset;
    config["samples"] = report.samples.size();
    config["n"] = report.config.n;
    config["w"] = report.config.w;
    config["a"] = report.config.a;
    config["binning"] = report.binning == Binning::quantile ? "quantile" : "uniform";
    config["max_lag"] = report.max_lag;
    config["include_lag0"] = report.include_lag0;
    config["subwindow"] = report.subwindow;
    config["numerosity_reduction"] = true;
    config["kl_smoothing"] = "add-one";
    config["log_base"] = "e";
    j["config"] = config;

    nlohmann::ordered_json per_sample = nlohmann::ordered_json::array();
    for (const SampleAnalysis& sa : report.samples) {
        nlohmann::ordered_json row;
        row["index"] = sa.index;
        row["label"] = sa.label;
        row["word"] = sa.word;
        row["sax"] = json_metrics(sa.sax);
        row["paa"] = json_metrics(sa.paa);
        nlohmann::ordered_json acf_block;
        acf_block["raw"] = json_optional(sa.abs_acf_raw);
        acf_block["sax"] = json_optional(sa.abs_acf_sax);
        acf_block["paa"] = json_optional(sa.abs_acf_paa);
        row["abs_mean_acf"] = acf_block;
        per_sample.push_back(std::move(row));
    }
    j["per_sample"] = per_sample;

    nlohmann::ordered_json agg;
    agg["mean_iec_sax"] = report.mean_iec_sax;
    agg["mean_iec_paa"] = report.mean_iec_paa;
    agg["mean_info_loss_sax"] = report.mean_info_loss_sax;
    agg["mean_info_loss_paa"] = report.mean_info_loss_paa;
    agg["mean_kl_sax"] = report.mean_kl_sax;
    agg["mean_kl_paa"] = report.mean_kl_paa;
    nlohmann::ordered_json acf_agg;
    acf_agg["raw"] = json_optional(report.mean_abs_acf_raw);
    acf_agg["sax"] = json_optional(report.mean_abs_acf_sax);
    acf_agg["paa"] = json_optional(report.mean_abs_acf_paa);
    agg["mean_abs_acf"] = acf_agg;
    agg["error_rate_raw"] = json_optional(report.error_rate_raw);
    agg["error_rate_bop"] = json_optional(report.error_rate_bop);
    j["aggregates"] = agg;

    j["regression"] = nullptr; // cross-dataset fits come from the regress command

    return j.dump(2);
}

} // namespace saxlab
