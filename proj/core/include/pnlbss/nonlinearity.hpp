#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace pnlbss {

/// One component-wise strictly increasing scalar function, used both for the
/// generative distortions f_i and the trainable compensators g_i.
///
/// Families:
///   identity            f(z) = z
///   scaled_tanh(a)      f(z) = tanh(a z), a > 0
///   cubic(c)            f(z) = z + c z^3, c >= 0
///   monotone_pwl        linear interpolation through strictly increasing
///                       (knot, value) pairs; linear extrapolation beyond the
///                       end knots with the end-segment slope
class Nonlinearity {
public:
    enum class Family { identity, scaled_tanh, cubic, monotone_pwl };

    static Nonlinearity identity();
    static Nonlinearity scaled_tanh(double a);
    static Nonlinearity cubic(double c);
    static Nonlinearity monotone_pwl(std::vector<double> knots, std::vector<double> values);

    /// Returns a copy with the declared domain replaced (closed interval).
    Nonlinearity with_domain(double lo, double hi) const;

    Family family() const { return family_; }
    double domain_lo() const { return domain_lo_; }
    double domain_hi() const { return domain_hi_; }

    double eval(double z) const;
    double deriv(double z) const;

    /// Solves eval(z) = x by bracketing bisection refined with Newton steps.
    /// Throws RangeError when x lies outside the image of the domain.
    double inverse(double x, double tol = kDefaultInverseTol) const;

    /// d eval / d theta for each family parameter (empty for identity).
    std::vector<double> param_grad(double z) const;
    /// d deriv / d theta for each family parameter.
    std::vector<double> deriv_param_grad(double z) const;

    /// Allocation-free variants; `out` must have param_count() entries.
    void param_grad_into(double z, std::span<double> out) const;
    void deriv_param_grad_into(double z, std::span<double> out) const;

    std::size_t param_count() const;

    // monotone_pwl access (throws for other families)
    const std::vector<double>& knots() const;
    const std::vector<double>& values() const;
    /// Copy with the same knots and new values (validated).
    Nonlinearity with_values(std::vector<double> values) const;
    /// Segment index in [0, K-1] and the interpolation coordinate within it
    /// (unclamped; lies outside [0,1] when extrapolating).
    std::pair<std::size_t, double> pwl_segment(double z) const;

    /// Slope bound used by the training-time projection.
    static constexpr double kMinSlope = 1e-6;
    static constexpr double kDefaultInverseTol = 1e-10;
    static constexpr double kDefaultDomain = 1e6;

private:
    Nonlinearity() = default;
    void check_domain(double z) const;

    Family family_ = Family::identity;
    double a_ = 1.0;                   // scaled_tanh
    double c_ = 0.0;                   // cubic
    std::vector<double> knots_;        // monotone_pwl
    std::vector<double> values_;       // monotone_pwl
    double domain_lo_ = -kDefaultDomain;
    double domain_hi_ = kDefaultDomain;
};

std::string_view to_string(Nonlinearity::Family family);

}  // namespace pnlbss
