#include "pnlbss/signal_block.hpp"

#include "pnlbss/errors.hpp"

namespace pnlbss {

std::string_view to_string(SignalRole role) {
    switch (role) {
        case SignalRole::source: return "source";
        case SignalRole::mixed: return "mixed";
        case SignalRole::observation: return "observation";
        case SignalRole::compensated: return "compensated";
        case SignalRole::output: return "output";
    }
    return "?";
}

SignalBlock::SignalBlock(Eigen::MatrixXd data, SignalRole role)
    : data_(std::move(data)), role_(role) {
    if (data_.rows() < 1 || data_.cols() < 1)
        throw InvalidArgumentError("SignalBlock: needs at least 1 channel and 1 sample");
    if (!data_.allFinite())
        throw InvalidArgumentError("SignalBlock: entries must be finite");
}

}  // namespace pnlbss
