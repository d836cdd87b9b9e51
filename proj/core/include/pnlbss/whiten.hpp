#pragma once

#include <Eigen/Dense>

#include "pnlbss/signal_block.hpp"

namespace pnlbss {

/// Affine standardization result: block = transform * (x - mean) per sample.
struct WhitenResult {
    SignalBlock block;
    Eigen::MatrixXd transform;
    Eigen::VectorXd mean;
};

/// Zero-mean, identity-covariance (ZCA) whitening. Uses the symmetric inverse
/// square root of the sample covariance (1/T convention), so already-white
/// data maps through a near-identity transform.
/// Requires T > C and smallest covariance eigenvalue > 1e-10.
WhitenResult whiten(const SignalBlock& x);

}  // namespace pnlbss
