#pragma once

#include <Eigen/Dense>
#include <string_view>

namespace pnlbss {

/// Position of a signal in the mixing/separating chain.
enum class SignalRole { source, mixed, observation, compensated, output };

std::string_view to_string(SignalRole role);

/// A channels x samples block of real signal data with a fixed role tag.
/// Immutable after construction; entries are validated to be finite.
class SignalBlock {
public:
    SignalBlock(Eigen::MatrixXd data, SignalRole role);

    const Eigen::MatrixXd& data() const { return data_; }
    SignalRole role() const { return role_; }
    Eigen::Index channels() const { return data_.rows(); }
    Eigen::Index samples() const { return data_.cols(); }

    /// Row view of one channel.
    auto channel(Eigen::Index i) const { return data_.row(i); }

private:
    Eigen::MatrixXd data_;
    SignalRole role_;
};

}  // namespace pnlbss
