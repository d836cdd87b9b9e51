#include "pnlbss/whiten.hpp"

#include "pnlbss/errors.hpp"

namespace pnlbss {

WhitenResult whiten(const SignalBlock& x) {
    const Eigen::Index c = x.channels();
    const Eigen::Index t = x.samples();
    if (t <= c) throw DegenerateDataError("whiten: needs more samples than channels");

    const Eigen::VectorXd mean = x.data().rowwise().mean();
    const Eigen::MatrixXd centered = x.data().colwise() - mean;
    const Eigen::MatrixXd cov = centered * centered.transpose() / static_cast<double>(t);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
    if (eig.info() != Eigen::Success)
        throw DegenerateDataError("whiten: covariance eigendecomposition failed");
    const Eigen::VectorXd evals = eig.eigenvalues();
    if (evals.minCoeff() <= 1e-10)
        throw DegenerateDataError(
            "whiten: covariance is numerically singular (constant or collinear channel)");

    const Eigen::MatrixXd transform = eig.eigenvectors() *
                                      evals.cwiseSqrt().cwiseInverse().asDiagonal() *
                                      eig.eigenvectors().transpose();
    return WhitenResult{SignalBlock(transform * centered, x.role()), transform, mean};
}

}  // namespace pnlbss
