#pragma once

#include <Eigen/Dense>
#include <span>
#include <string_view>
#include <vector>

namespace pnlbss {

enum class ScoreEstimator { gram_charlier, kernel };

std::string_view to_string(ScoreEstimator estimator);

/// Score function model psi(u) = -d/du log p(u) for one standardized channel.
///
/// gram_charlier: polynomial score from sample skewness/kurtosis,
///   psi(u) = u - k3/2 (u^2 - 1) - k4/6 (u^3 - 3u).
/// kernel: Gaussian kernel density with Silverman bandwidth, evaluated on a
///   512-node grid via linear binning; psi interpolates linearly between
///   nodes (with end-slope extrapolation).
///
/// neg_log_density() is the exact antiderivative of psi(), so finite
/// differences of it reproduce psi to rounding error; the training gradients
/// are validated against it.
class ChannelScoreModel {
public:
    static ChannelScoreModel fit(std::span<const double> u, ScoreEstimator estimator);

    double psi(double u) const;
    double neg_log_density(double u) const;

    ScoreEstimator estimator() const { return estimator_; }
    double skewness() const { return k3_; }
    double excess_kurtosis() const { return k4_; }

    static constexpr int kGridSize = 512;

private:
    ChannelScoreModel() = default;

    ScoreEstimator estimator_ = ScoreEstimator::gram_charlier;
    double k3_ = 0.0, k4_ = 0.0;  // gram_charlier

    // kernel: psi sampled on a uniform grid plus its exact antiderivative
    double grid_lo_ = 0.0, grid_step_ = 1.0;
    std::vector<double> psi_nodes_;
    std::vector<double> nld_nodes_;
};

/// Spec-level op: scores of one standardized channel at its own samples.
/// Throws InsufficientDataError for fewer than 100 samples.
std::vector<double> score_fn(std::span<const double> y_channel, ScoreEstimator estimator);

/// Score model of a raw (unstandardized) output channel: standardizes with
/// frozen mean/stddev, so psi and neg_log_density transform consistently.
struct OutputScoreModel {
    double mean = 0.0;
    double stddev = 1.0;
    ChannelScoreModel model;

    double psi(double y) const { return model.psi((y - mean) / stddev) / stddev; }
    double neg_log_density(double y) const {
        return model.neg_log_density((y - mean) / stddev) + std::log(stddev);
    }
};

/// Fits one OutputScoreModel per channel of Y.
std::vector<OutputScoreModel> fit_output_scores(const Eigen::MatrixXd& y,
                                                ScoreEstimator estimator);

/// Matrix of psi values: scores(i, t) = psi_i(y(i, t)).
Eigen::MatrixXd score_matrix(const Eigen::MatrixXd& y,
                             const std::vector<OutputScoreModel>& models);

}  // namespace pnlbss
