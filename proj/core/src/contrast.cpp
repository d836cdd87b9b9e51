#include "pnlbss/contrast.hpp"

#include <cmath>

#include "pnlbss/entropy.hpp"
#include "pnlbss/errors.hpp"
#include "pnlbss/mixing_matrix.hpp"

namespace pnlbss {

namespace {

double checked_log_abs_det(const Eigen::MatrixXd& w) {
    const double det = w.determinant();
    if (std::abs(det) < MixingMatrix::kDetTolerance)
        throw DegenerateDataError("contrast: unmixing matrix is numerically singular");
    return std::log(std::abs(det));
}

double mean_log_deriv(const std::vector<Nonlinearity>& gs, const SignalBlock& x) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < x.channels(); ++i) {
        const auto& g = gs[static_cast<std::size_t>(i)];
        for (Eigen::Index t = 0; t < x.samples(); ++t) {
            const double d = g.deriv(x.data()(i, t));
            if (!(d > 0.0))
                throw MonotonicityError("contrast: compensator derivative is not positive");
            acc += std::log(d);
        }
    }
    return acc / static_cast<double>(x.samples());
}

}  // namespace

ContrastValue contrast(const Separator& sep, const SignalBlock& observations) {
    const SignalBlock y = separate(sep, observations);
    ContrastValue v;
    std::vector<double> channel(static_cast<std::size_t>(y.samples()));
    for (Eigen::Index i = 0; i < y.channels(); ++i) {
        Eigen::Map<Eigen::VectorXd>(channel.data(), y.samples()) = y.channel(i).transpose();
        v.marginal_entropy_sum += vasicek_entropy(channel);
    }
    v.log_det_w = checked_log_abs_det(sep.unmixing.entries());
    v.log_deriv_mean = mean_log_deriv(sep.compensators, observations);
    v.total = v.marginal_entropy_sum - v.log_det_w - v.log_deriv_mean;
    return v;
}

double likelihood_contrast(const Separator& sep, const SignalBlock& observations,
                           const std::vector<OutputScoreModel>& models) {
    const SignalBlock y = separate(sep, observations);
    if (models.size() != static_cast<std::size_t>(y.channels()))
        throw DimensionError("likelihood_contrast: one score model per channel required");
    double nll = 0.0;
    for (Eigen::Index i = 0; i < y.channels(); ++i) {
        const auto& m = models[static_cast<std::size_t>(i)];
        for (Eigen::Index t = 0; t < y.samples(); ++t) nll += m.neg_log_density(y.data()(i, t));
    }
    nll /= static_cast<double>(y.samples());
    return nll - checked_log_abs_det(sep.unmixing.entries()) -
           mean_log_deriv(sep.compensators, observations);
}

}  // namespace pnlbss
