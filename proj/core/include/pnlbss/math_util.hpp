#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace pnlbss {

/// Standard normal quantile function (inverse CDF).
/// Acklam's rational approximation polished with one Halley step; accurate to
/// ~1e-15 relative over (0, 1).
double norm_quantile(double p);

/// Type-7 quantile (linear interpolation of order statistics) of an ascending
/// sorted sequence, p in [0, 1].
double quantile_sorted(std::span<const double> sorted, double p);

struct MeanVar {
    double mean = 0.0;
    double variance = 0.0;  // population (1/T) convention
};

MeanVar mean_var(std::span<const double> x);

/// Sorted copy (stable sort; ties keep input order).
std::vector<double> sorted_copy(std::span<const double> x);

}  // namespace pnlbss
