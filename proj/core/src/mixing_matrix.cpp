#include "pnlbss/mixing_matrix.hpp"

#include "pnlbss/errors.hpp"

namespace pnlbss {

namespace {

void check_square_finite(const Eigen::MatrixXd& m, const char* what) {
    if (m.rows() < 1 || m.rows() != m.cols())
        throw DimensionError(std::string(what) + ": matrix must be square (P = N)");
    if (!m.allFinite()) throw InvalidArgumentError(std::string(what) + ": entries must be finite");
}

}  // namespace

MixingMatrix MixingMatrix::mixing(Eigen::MatrixXd entries) {
    check_square_finite(entries, "MixingMatrix::mixing");
    if (std::abs(entries.determinant()) <= kDetTolerance)
        throw InvalidArgumentError("MixingMatrix::mixing: matrix is numerically singular");
    for (Eigen::Index i = 0; i < entries.rows(); ++i) {
        int nonzero = 0;
        for (Eigen::Index j = 0; j < entries.cols(); ++j)
            if (std::abs(entries(i, j)) > kMixingEntryTolerance) ++nonzero;
        if (nonzero < 2)
            throw InvalidArgumentError(
                "MixingMatrix::mixing: row " + std::to_string(i) +
                " has fewer than two significant entries (unidentifiable channel)");
    }
    return MixingMatrix(std::move(entries));
}

MixingMatrix MixingMatrix::unmixing(Eigen::MatrixXd entries) {
    check_square_finite(entries, "MixingMatrix::unmixing");
    return MixingMatrix(std::move(entries));
}

}  // namespace pnlbss
