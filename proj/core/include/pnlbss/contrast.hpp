#pragma once

#include <vector>

#include "pnlbss/model.hpp"
#include "pnlbss/score.hpp"
#include "pnlbss/signal_block.hpp"

namespace pnlbss {

/// Mutual-information contrast value with its three terms:
///   total = marginal_entropy_sum - log_det_w - log_deriv_mean
/// (the parameter-independent H(x) is dropped, so totals are comparable only
/// within one dataset).
struct ContrastValue {
    double total = 0.0;
    double marginal_entropy_sum = 0.0;
    double log_det_w = 0.0;
    double log_deriv_mean = 0.0;
};

/// Evaluates the contrast of a separator on observations. Marginal entropies
/// use the Vasicek m-spacing estimator with m = floor(sqrt T).
/// Throws on |det W| < 1e-12 (singular unmixing) and on any nonpositive
/// compensator derivative over the data (monotonicity violation).
ContrastValue contrast(const Separator& sep, const SignalBlock& observations);

/// Likelihood form of the contrast under frozen per-channel score models:
///   (1/T) sum_t sum_i -log p_i(y_i[t]) - log|det W| - (1/T) sum_{t,i} log g_i'(x_i[t])
/// Its exact gradient is the score-based gradient used by the updates, which
/// makes it the reference function for finite-difference gradient checks.
double likelihood_contrast(const Separator& sep, const SignalBlock& observations,
                           const std::vector<OutputScoreModel>& models);

}  // namespace pnlbss
