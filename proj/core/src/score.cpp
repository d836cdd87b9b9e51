#include "pnlbss/score.hpp"

#include <algorithm>
#include <cmath>

#include "pnlbss/errors.hpp"
#include "pnlbss/math_util.hpp"

namespace pnlbss {

std::string_view to_string(ScoreEstimator estimator) {
    return estimator == ScoreEstimator::gram_charlier ? "gram_charlier" : "kernel";
}

namespace {

ChannelScoreModel fit_gram_charlier(std::span<const double> u);
ChannelScoreModel fit_kernel(std::span<const double> u);

}  // namespace

ChannelScoreModel ChannelScoreModel::fit(std::span<const double> u, ScoreEstimator estimator) {
    if (u.size() < 100)
        throw InsufficientDataError("ChannelScoreModel: needs at least 100 samples");
    return estimator == ScoreEstimator::gram_charlier ? fit_gram_charlier(u) : fit_kernel(u);
}

namespace {

ChannelScoreModel fit_gram_charlier(std::span<const double> u) {
    double m3 = 0.0, m4 = 0.0;
    for (double v : u) {
        const double v2 = v * v;
        m3 += v2 * v;
        m4 += v2 * v2;
    }
    const double t = static_cast<double>(u.size());
    ChannelScoreModel m;
    m.estimator_ = ScoreEstimator::gram_charlier;
    m.k3_ = m3 / t;
    m.k4_ = m4 / t - 3.0;
    return m;
}

ChannelScoreModel fit_kernel(std::span<const double> u) {
    const double t = static_cast<double>(u.size());
    const auto sorted = sorted_copy(u);
    const double sigma = std::sqrt(mean_var(u).variance);
    const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
    double spread = std::min(sigma, iqr / 1.34);
    if (spread <= 0.0) spread = sigma;
    if (spread <= 0.0) throw DegenerateDataError("kernel score: zero-spread channel");
    const double h = 0.9 * spread * std::pow(t, -0.2);  // Silverman's rule of thumb

    constexpr int g = ChannelScoreModel::kGridSize;
    const double lo = sorted.front() - 4.0 * h;
    const double hi = sorted.back() + 4.0 * h;
    const double step = (hi - lo) / (g - 1);

    // Linear binning of the samples onto the grid.
    std::vector<double> bins(static_cast<std::size_t>(g), 0.0);
    for (double v : u) {
        const double w = (v - lo) / step;
        auto j = static_cast<long>(std::floor(w));
        j = std::clamp(j, 0L, static_cast<long>(g) - 2);
        const double frac = w - static_cast<double>(j);
        bins[static_cast<std::size_t>(j)] += 1.0 - frac;
        bins[static_cast<std::size_t>(j) + 1] += frac;
    }

    // Discrete Gaussian convolution for density and its derivative.
    const auto radius = std::min<long>(g - 1, static_cast<long>(std::ceil(8.0 * h / step)));
    std::vector<double> kern(static_cast<std::size_t>(radius) + 1);
    std::vector<double> dkern(static_cast<std::size_t>(radius) + 1);
    for (long r = 0; r <= radius; ++r) {
        const double d = static_cast<double>(r) * step / h;
        kern[static_cast<std::size_t>(r)] = std::exp(-0.5 * d * d);
        dkern[static_cast<std::size_t>(r)] = d * kern[static_cast<std::size_t>(r)];
    }
    const double pnorm = 1.0 / (t * h * std::sqrt(2.0 * M_PI));
    const double dnorm = pnorm / h;

    ChannelScoreModel m;
    m.estimator_ = ScoreEstimator::kernel;
    m.grid_lo_ = lo;
    m.grid_step_ = step;
    m.psi_nodes_.resize(g);
    m.nld_nodes_.resize(g);
    double p0 = 0.0;
    for (long j = 0; j < g; ++j) {
        double p = 0.0, dp = 0.0;
        for (long r = -radius; r <= radius; ++r) {
            const long k = j - r;
            if (k < 0 || k >= g) continue;
            const double w = bins[static_cast<std::size_t>(k)];
            if (w == 0.0) continue;
            const auto a = static_cast<std::size_t>(std::abs(r));
            p += w * kern[a];
            dp += w * (r >= 0 ? -dkern[a] : dkern[a]);
        }
        p *= pnorm;
        dp *= dnorm;
        m.psi_nodes_[static_cast<std::size_t>(j)] = -dp / std::max(p, 1e-300);
        if (j == 0) p0 = std::max(p, 1e-300);
    }
    // Exact antiderivative of the piecewise-linear psi (trapezoid per segment).
    m.nld_nodes_[0] = -std::log(p0);
    for (long j = 1; j < g; ++j)
        m.nld_nodes_[static_cast<std::size_t>(j)] =
            m.nld_nodes_[static_cast<std::size_t>(j - 1)] +
            0.5 * (m.psi_nodes_[static_cast<std::size_t>(j - 1)] +
                   m.psi_nodes_[static_cast<std::size_t>(j)]) *
                step;
    return m;
}

}  // namespace

double ChannelScoreModel::psi(double u) const {
    if (estimator_ == ScoreEstimator::gram_charlier) {
        const double u2 = u * u;
        return u - 0.5 * k3_ * (u2 - 1.0) - k4_ / 6.0 * (u2 * u - 3.0 * u);
    }
    const auto g = static_cast<long>(psi_nodes_.size());
    double w = (u - grid_lo_) / grid_step_;
    long j = static_cast<long>(std::floor(w));
    j = std::clamp(j, 0L, g - 2);
    const double lambda = w - static_cast<double>(j);
    const auto ju = static_cast<std::size_t>(j);
    return psi_nodes_[ju] + lambda * (psi_nodes_[ju + 1] - psi_nodes_[ju]);
}

double ChannelScoreModel::neg_log_density(double u) const {
    if (estimator_ == ScoreEstimator::gram_charlier) {
        const double u2 = u * u;
        // antiderivative of psi; additive constant omitted
        return 0.5 * u2 - 0.5 * k3_ * (u2 * u / 3.0 - u) - k4_ / 6.0 * (u2 * u2 / 4.0 - 1.5 * u2);
    }
    const auto g = static_cast<long>(psi_nodes_.size());
    double w = (u - grid_lo_) / grid_step_;
    long j = static_cast<long>(std::floor(w));
    j = std::clamp(j, 0L, g - 2);
    const auto ju = static_cast<std::size_t>(j);
    const double du = u - (grid_lo_ + static_cast<double>(j) * grid_step_);
    const double slope = (psi_nodes_[ju + 1] - psi_nodes_[ju]) / grid_step_;
    return nld_nodes_[ju] + psi_nodes_[ju] * du + 0.5 * slope * du * du;
}

std::vector<double> score_fn(std::span<const double> y_channel, ScoreEstimator estimator) {
    const auto model = ChannelScoreModel::fit(y_channel, estimator);
    std::vector<double> out(y_channel.size());
    for (std::size_t i = 0; i < y_channel.size(); ++i) out[i] = model.psi(y_channel[i]);
    return out;
}

std::vector<OutputScoreModel> fit_output_scores(const Eigen::MatrixXd& y,
                                                ScoreEstimator estimator) {
    std::vector<OutputScoreModel> models;
    models.reserve(static_cast<std::size_t>(y.rows()));
    std::vector<double> u(static_cast<std::size_t>(y.cols()));
    for (Eigen::Index i = 0; i < y.rows(); ++i) {
        const double mean = y.row(i).mean();
        const double var = (y.row(i).array() - mean).square().mean();
        if (var <= 0.0) throw DegenerateDataError("fit_output_scores: constant output channel");
        const double sd = std::sqrt(var);
        for (Eigen::Index t = 0; t < y.cols(); ++t)
            u[static_cast<std::size_t>(t)] = (y(i, t) - mean) / sd;
        models.push_back({mean, sd, ChannelScoreModel::fit(u, estimator)});
    }
    return models;
}

Eigen::MatrixXd score_matrix(const Eigen::MatrixXd& y,
                             const std::vector<OutputScoreModel>& models) {
    Eigen::MatrixXd psi(y.rows(), y.cols());
    for (Eigen::Index i = 0; i < y.rows(); ++i) {
        const auto& m = models[static_cast<std::size_t>(i)];
        for (Eigen::Index t = 0; t < y.cols(); ++t) psi(i, t) = m.psi(y(i, t));
    }
    return psi;
}

}  // namespace pnlbss
