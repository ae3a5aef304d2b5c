#pragma once

#include "saxlab/series.hpp"

#include <string>

namespace saxlab {

/// Per-sample scores for one symbolic representation. kl is in nats;
/// info_loss in squared [0,1]-scaled amplitude; the *_std fields and iec
/// live in [0,1].
struct MetricsRecord {
    double info_loss = 0.0;
    double kl = 0.0;
    double info_loss_std = 0.0;
    double kl_std = 0.0;
    double iec = 0.0;
};

/// Mean square error with an n-1 denominator, index aligned. Both series
/// are expected to be [0,1]-scaled already.
double info_loss(const Series& recon, const Series& orig);

/// KL(P||Q) in nats after add-one smoothing of both count vectors.
double kl_divergence(const Histogram& p_counts, const Histogram& q_counts);

/// kl_std / (1 + info_loss_std). Both arguments must be in [0,1].
double iec(double kl_std, double info_loss_std);

/// Full scoring pipeline for one (original, reconstruction) pair:
/// unit-scale both, bin the scaled original (quantile bins by default),
/// histogram both over those edges, then KL, MSE, standardization
/// (kl_std = min(kl/ln a, 1), info_loss_std = min(mse, 1)) and IEC.
MetricsRecord iec_for_representation(const Series& orig, const Series& recon, int alphabet,
                                     Binning binning = Binning::quantile);

/// Flat JSON object with keys info_loss, kl, info_loss_std, kl_std, iec.
std::string to_json(const MetricsRecord& m);

} // namespace saxlab
