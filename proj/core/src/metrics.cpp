#include "saxlab/metrics.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace saxlab {

double info_loss(const Series& recon, const Series& orig) {
    if (recon.size() != orig.size())
        throw std::invalid_argument("info_loss: length mismatch");
    const std::size_t n = orig.size();
    if (n < 2) throw std::invalid_argument("info_loss: need at least 2 samples");
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = recon[i] - orig[i];
        sum += d * d;
    }
    return sum / static_cast<double>(n - 1);
}

double kl_divergence(const Histogram& p_counts, const Histogram& q_counts) {
    const std::size_t k = p_counts.counts.size();
    if (k != q_counts.counts.size())
        throw std::invalid_argument("kl_divergence: bin-count mismatch");
    if (k == 0) throw std::invalid_argument("kl_divergence: empty histograms");
    if (p_counts.total < 1 || q_counts.total < 1)
        throw std::invalid_argument("kl_divergence: histograms must have totals >= 1");

    const double p_norm = static_cast<double>(p_counts.total) + static_cast<double>(k);
    const double q_norm = static_cast<double>(q_counts.total) + static_cast<double>(k);
    double kl = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double p = (static_cast<double>(p_counts.counts[i]) + 1.0) / p_norm;
        const double q = (static_cast<double>(q_counts.counts[i]) + 1.0) / q_norm;
        kl += p * std::log(p / q);
    }
    // Gibbs' inequality guarantees kl >= 0; stop rounding noise from
    // leaking a -1e-17 on near-identical distributions.
    return std::max(kl, 0.0);
}

double iec(double kl_std, double info_loss_std) {
    if (!(kl_std >= 0.0 && kl_std <= 1.0))
        throw std::invalid_argument("iec: kl_std must be in [0,1]");
    if (!(info_loss_std >= 0.0 && info_loss_std <= 1.0))
        throw std::invalid_argument("iec: info_loss_std must be in [0,1]");
    return kl_std / (1.0 + info_loss_std);
}

MetricsRecord iec_for_representation(const Series& orig, const Series& recon, int alphabet,
                                     Binning binning) {
    if (orig.size() != recon.size())
        throw std::invalid_argument("iec_for_representation: length mismatch");
    if (alphabet < 2)
        throw std::invalid_argument("iec_for_representation: alphabet must be >= 2");

    const Series so = scale_unit(orig);
    const Series sr = scale_unit(recon);
    const BinEdges edges = (binning == Binning::quantile) ? quantile_edges(so, alphabet)
                                                          : uniform_edges(so, alphabet);
    const Histogram p = histogram(so, edges);
    const Histogram q = histogram(sr, edges);

    MetricsRecord m;
    m.kl = kl_divergence(p, q);
    m.info_loss = info_loss(sr, so);
    // lower clamp guards against -1e-18 style rounding on near-identical bins
    m.kl_std = std::clamp(m.kl / std::log(static_cast<double>(alphabet)), 0.0, 1.0);
    m.info_loss_std = std::min(m.info_loss, 1.0);
    m.iec = iec(m.kl_std, m.info_loss_std);
    return m;
}

std::string to_json(const MetricsRecord& m) {
    nlohmann::ordered_json j;
    j["info_loss"] = m.info_loss;
    j["kl"] = m.kl;
    j["info_loss_std"] = m.info_loss_std;
    j["kl_std"] = m.kl_std;
    j["iec"] = m.iec;
    return j.dump();
}

} // namespace saxlab
