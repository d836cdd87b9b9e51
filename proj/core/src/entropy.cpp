#include "pnlbss/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pnlbss/errors.hpp"

namespace pnlbss {

double vasicek_entropy_sorted(std::span<const double> sorted) {
    const auto t = sorted.size();
    if (t < 4) throw InsufficientDataError("vasicek_entropy: needs at least 4 samples");
    const auto m = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(t))));
    const double range = sorted.back() - sorted.front();
    const double floor_spacing = 1e-12 * std::max(range, 1e-30);
    const double scale = static_cast<double>(t) / (2.0 * static_cast<double>(m));
    double acc = 0.0;
    for (std::size_t i = 0; i < t; ++i) {
        const std::size_t hi = std::min(i + m, t - 1);
        const std::size_t lo = i >= m ? i - m : 0;
        acc += std::log(scale * std::max(sorted[hi] - sorted[lo], floor_spacing));
    }
    return acc / static_cast<double>(t);
}

double vasicek_entropy(std::span<const double> x) {
    std::vector<double> sorted(x.begin(), x.end());
    std::stable_sort(sorted.begin(), sorted.end());
    return vasicek_entropy_sorted(sorted);
}

}  // namespace pnlbss
