#pragma once

#include "kerrsim/stats/source_model.hpp"

namespace kerrsim::stats {

/// Exact per-pulse probabilities of every tally in CountsSummary.
///
/// Evaluated in closed form from the probability generating functions of the
/// pair and noise distributions, so no photon-number truncation is involved.
struct DetectionProbabilities {
  double idler = 0.0;
  double signal1 = 0.0;
  double signal2 = 0.0;
  double two_fold_1i = 0.0;
  double two_fold_2i = 0.0;
  double three_fold_12i = 0.0;
};

DetectionProbabilities detection_probabilities(const SourceModel& model);

/// Large-sample value of the heralded g2 estimator, P_12i P_i / (P_1i P_2i).
double expected_heralded_g2(const SourceModel& model);

/// Mean number of pair photons at the analyzed port per idler click.
double heralded_signal_photons(const SourceModel& model);

/// Intrinsic g2 of the noise photons: 1 for poissonian, 1 + 1/modes for thermal.
double noise_g2(const SourceModel& model);

/// Mean pair number that makes expected_heralded_g2 equal `target_g2`, all
/// other fields of `model` held fixed and the noise switched off.
/// Solved on the branch above the minimum of g2(mu) (dark counts make g2 rise
/// again as mu -> 0). Throws DomainError when the target is unreachable.
double calibrate_mean_pairs(SourceModel model, double target_g2);

}  // namespace kerrsim::stats
