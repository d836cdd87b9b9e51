#pragma once

#include <span>

namespace pnlbss {

/// Vasicek m-spacing differential entropy estimate (nats) with m = floor(sqrt T).
/// Boundary spacings are clamped to the end samples; zero spacings (exact
/// ties) are floored at 1e-12 of the data range to keep the logs finite.
double vasicek_entropy(std::span<const double> x);

/// Same estimate on data that is already sorted ascending.
double vasicek_entropy_sorted(std::span<const double> sorted);

}  // namespace pnlbss
