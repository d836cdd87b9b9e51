#include "pnlbss/model.hpp"

#include <string>

#include "pnlbss/errors.hpp"

namespace pnlbss {

namespace {

void require_role(const SignalBlock& block, SignalRole expected, const char* op) {
    if (block.role() != expected)
        throw InvalidArgumentError(std::string(op) + ": expected a " +
                                   std::string(to_string(expected)) + " block, got " +
                                   std::string(to_string(block.role())));
}

SignalBlock apply_channelwise(const std::vector<Nonlinearity>& fns, const SignalBlock& in,
                              SignalRole out_role, const char* op) {
    if (static_cast<Eigen::Index>(fns.size()) != in.channels())
        throw DimensionError(std::string(op) + ": " + std::to_string(fns.size()) +
                             " functions for " + std::to_string(in.channels()) + " channels");
    Eigen::MatrixXd out(in.channels(), in.samples());
    for (Eigen::Index i = 0; i < in.channels(); ++i) {
        const auto& f = fns[static_cast<std::size_t>(i)];
        for (Eigen::Index t = 0; t < in.samples(); ++t) out(i, t) = f.eval(in.data()(i, t));
    }
    return SignalBlock(std::move(out), out_role);
}

}  // namespace

PnlModel::PnlModel(MixingMatrix mixing_, std::vector<Nonlinearity> distortions_)
    : mixing(std::move(mixing_)), distortions(std::move(distortions_)) {
    if (static_cast<Eigen::Index>(distortions.size()) != mixing.size())
        throw DimensionError("PnlModel: needs one distortion per mixing row");
}

Separator::Separator(std::vector<Nonlinearity> compensators_, MixingMatrix unmixing_)
    : compensators(std::move(compensators_)), unmixing(std::move(unmixing_)) {
    if (static_cast<Eigen::Index>(compensators.size()) != unmixing.size())
        throw DimensionError("Separator: needs one compensator per unmixing column");
}

SignalBlock mix_linear(const MixingMatrix& a, const SignalBlock& sources) {
    require_role(sources, SignalRole::source, "mix_linear");
    if (a.entries().cols() != sources.channels())
        throw DimensionError("mix_linear: matrix has " + std::to_string(a.entries().cols()) +
                             " columns but block has " + std::to_string(sources.channels()) +
                             " channels");
    return SignalBlock(a.entries() * sources.data(), SignalRole::mixed);
}

SignalBlock apply_nonlinearities(const std::vector<Nonlinearity>& fs, const SignalBlock& mixed) {
    require_role(mixed, SignalRole::mixed, "apply_nonlinearities");
    return apply_channelwise(fs, mixed, SignalRole::observation, "apply_nonlinearities");
}

SignalBlock compensate(const std::vector<Nonlinearity>& gs, const SignalBlock& observations) {
    require_role(observations, SignalRole::observation, "compensate");
    return apply_channelwise(gs, observations, SignalRole::compensated, "compensate");
}

SignalBlock unmix(const MixingMatrix& w, const SignalBlock& compensated) {
    require_role(compensated, SignalRole::compensated, "unmix");
    if (w.entries().cols() != compensated.channels())
        throw DimensionError("unmix: matrix has " + std::to_string(w.entries().cols()) +
                             " columns but block has " + std::to_string(compensated.channels()) +
                             " channels");
    return SignalBlock(w.entries() * compensated.data(), SignalRole::output);
}

SignalBlock forward(const PnlModel& model, const SignalBlock& sources) {
    return apply_nonlinearities(model.distortions, mix_linear(model.mixing, sources));
}

SignalBlock separate(const Separator& sep, const SignalBlock& observations) {
    return unmix(sep.unmixing, compensate(sep.compensators, observations));
}

Separator exact_inverse(const PnlModel& model, const SignalBlock& observations, double tol) {
    require_role(observations, SignalRole::observation, "exact_inverse");
    if (static_cast<Eigen::Index>(model.distortions.size()) != observations.channels())
        throw DimensionError("exact_inverse: model/observation channel mismatch");

    // Compensators interpolate f^{-1} through exact (f(z), z) pairs on a dense
    // z-grid covering the observed range; interpolation error stays well under
    // the round-trip tolerance.
    constexpr int kInverseKnots = 16384;
    std::vector<Nonlinearity> gs;
    gs.reserve(model.distortions.size());
    for (Eigen::Index i = 0; i < observations.channels(); ++i) {
        const auto& f = model.distortions[static_cast<std::size_t>(i)];
        if (f.family() == Nonlinearity::Family::identity) {
            gs.push_back(Nonlinearity::identity());
            continue;
        }
        const double x_min = observations.channel(i).minCoeff();
        const double x_max = observations.channel(i).maxCoeff();
        const double pad = 0.05 * std::max(x_max - x_min, 1e-6);
        double z_lo = f.inverse(x_min - pad, tol);
        double z_hi = f.inverse(x_max + pad, tol);
        if (!(z_hi > z_lo)) z_hi = z_lo + 1.0;
        std::vector<double> knots(kInverseKnots), values(kInverseKnots);
        for (int j = 0; j < kInverseKnots; ++j) {
            const double z = z_lo + (z_hi - z_lo) * j / double(kInverseKnots - 1);
            values[static_cast<std::size_t>(j)] = z;
            knots[static_cast<std::size_t>(j)] = f.eval(z);
        }
        gs.push_back(Nonlinearity::monotone_pwl(std::move(knots), std::move(values)));
    }
    return Separator(std::move(gs), MixingMatrix::unmixing(model.mixing.entries().inverse()));
}

}  // namespace pnlbss
