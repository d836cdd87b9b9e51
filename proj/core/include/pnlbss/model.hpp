#pragma once

#include <vector>

#include "pnlbss/mixing_matrix.hpp"
#include "pnlbss/nonlinearity.hpp"
#include "pnlbss/signal_block.hpp"

namespace pnlbss {

/// Generative pair: x = f(A s).
struct PnlModel {
    PnlModel(MixingMatrix mixing, std::vector<Nonlinearity> distortions);

    MixingMatrix mixing;
    std::vector<Nonlinearity> distortions;
};

/// Separating pair: y = W g(x).
struct Separator {
    Separator(std::vector<Nonlinearity> compensators, MixingMatrix unmixing);

    std::vector<Nonlinearity> compensators;
    MixingMatrix unmixing;
};

/// Z = A S.
SignalBlock mix_linear(const MixingMatrix& a, const SignalBlock& sources);

/// X[i,t] = f_i(Z[i,t]); strictly per channel.
SignalBlock apply_nonlinearities(const std::vector<Nonlinearity>& fs, const SignalBlock& mixed);

/// E[i,t] = g_i(X[i,t]); same contract as apply_nonlinearities.
SignalBlock compensate(const std::vector<Nonlinearity>& gs, const SignalBlock& observations);

/// Y = W E.
SignalBlock unmix(const MixingMatrix& w, const SignalBlock& compensated);

/// Full generative chain: apply_nonlinearities(f, mix_linear(A, S)).
SignalBlock forward(const PnlModel& model, const SignalBlock& sources);

/// Full separating chain: unmix(W, compensate(g, X)).
SignalBlock separate(const Separator& sep, const SignalBlock& observations);

/// Separator that inverts a model exactly: g_i = f_i^{-1} (numeric), W = A^{-1}.
/// Test/diagnostic helper; a real separator is estimated from data.
Separator exact_inverse(const PnlModel& model, const SignalBlock& observations,
                        double tol = Nonlinearity::kDefaultInverseTol);

}  // namespace pnlbss
