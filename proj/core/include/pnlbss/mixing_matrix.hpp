#pragma once

#include <Eigen/Dense>

namespace pnlbss {

/// Square real matrix for both the generative mixing A and the estimated
/// unmixing W. Generative construction additionally enforces invertibility
/// and a per-row mixing condition; estimated matrices are validated where
/// they are used (determinant guards in the estimation loop).
class MixingMatrix {
public:
    /// Generative mixing matrix: square, finite, |det| > 1e-12, and at least
    /// two entries per row with magnitude above 1e-9.
    static MixingMatrix mixing(Eigen::MatrixXd entries);

    /// Estimated unmixing matrix: square and finite.
    static MixingMatrix unmixing(Eigen::MatrixXd entries);

    const Eigen::MatrixXd& entries() const { return entries_; }
    Eigen::Index size() const { return entries_.rows(); }
    double abs_det() const { return std::abs(entries_.determinant()); }

    static constexpr double kDetTolerance = 1e-12;
    static constexpr double kMixingEntryTolerance = 1e-9;

private:
    explicit MixingMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {}
    Eigen::MatrixXd entries_;
};

}  // namespace pnlbss
