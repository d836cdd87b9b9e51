#include "pnlbss/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pnlbss/errors.hpp"

namespace pnlbss {

std::string_view to_string(Nonlinearity::Family family) {
    switch (family) {
        case Nonlinearity::Family::identity: return "identity";
        case Nonlinearity::Family::scaled_tanh: return "scaled_tanh";
        case Nonlinearity::Family::cubic: return "cubic";
        case Nonlinearity::Family::monotone_pwl: return "monotone_pwl";
    }
    return "?";
}

Nonlinearity Nonlinearity::identity() { return Nonlinearity(); }

Nonlinearity Nonlinearity::scaled_tanh(double a) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw InvalidArgumentError("scaled_tanh: parameter a must be positive and finite");
    Nonlinearity nl;
    nl.family_ = Family::scaled_tanh;
    nl.a_ = a;
    return nl;
}

Nonlinearity Nonlinearity::cubic(double c) {
    if (!(c >= 0.0) || !std::isfinite(c))
        throw InvalidArgumentError("cubic: parameter c must be nonnegative and finite");
    Nonlinearity nl;
    nl.family_ = Family::cubic;
    nl.c_ = c;
    return nl;
}

namespace {
// Constructor slope floor (looser than the training-time projection bound).
constexpr double kConstructSlope = 1e-9;
}  // namespace

Nonlinearity Nonlinearity::monotone_pwl(std::vector<double> knots, std::vector<double> values) {
    if (knots.size() != values.size())
        throw InvalidArgumentError("monotone_pwl: knots and values must have matching length");
    if (knots.size() < 2) throw InvalidArgumentError("monotone_pwl: needs at least two knots");
    for (std::size_t j = 0; j + 1 < knots.size(); ++j) {
        if (!std::isfinite(knots[j]) || !std::isfinite(values[j]) ||
            !std::isfinite(knots[j + 1]) || !std::isfinite(values[j + 1]))
            throw InvalidArgumentError("monotone_pwl: knots and values must be finite");
        if (!(knots[j + 1] > knots[j]))
            throw InvalidArgumentError("monotone_pwl: knots must be strictly increasing");
        const double slope = (values[j + 1] - values[j]) / (knots[j + 1] - knots[j]);
        if (!(slope > kConstructSlope))
            throw InvalidArgumentError("monotone_pwl: values must be strictly increasing "
                                       "(segment slope must exceed 1e-9)");
    }
    Nonlinearity nl;
    nl.family_ = Family::monotone_pwl;
    nl.knots_ = std::move(knots);
    nl.values_ = std::move(values);
    return nl;
}

Nonlinearity Nonlinearity::with_domain(double lo, double hi) const {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw InvalidArgumentError("with_domain: needs finite lo < hi");
    Nonlinearity nl = *this;
    nl.domain_lo_ = lo;
    nl.domain_hi_ = hi;
    return nl;
}

void Nonlinearity::check_domain(double z) const {
    if (!(z >= domain_lo_ && z <= domain_hi_))
        throw DomainError("nonlinearity: argument " + std::to_string(z) +
                          " outside declared domain [" + std::to_string(domain_lo_) + ", " +
                          std::to_string(domain_hi_) + "]");
}

std::pair<std::size_t, double> Nonlinearity::pwl_segment(double z) const {
    // Right-continuous segment choice: z == knot j selects segment j (clamped).
    const auto& k = knots_;
    auto it = std::upper_bound(k.begin(), k.end(), z);
    std::size_t idx = static_cast<std::size_t>(it - k.begin());
    idx = idx == 0 ? 0 : idx - 1;
    if (idx > k.size() - 2) idx = k.size() - 2;
    const double lambda = (z - k[idx]) / (k[idx + 1] - k[idx]);
    return {idx, lambda};
}

double Nonlinearity::eval(double z) const {
    check_domain(z);
    switch (family_) {
        case Family::identity: return z;
        case Family::scaled_tanh: return std::tanh(a_ * z);
        case Family::cubic: return z + c_ * z * z * z;
        case Family::monotone_pwl: {
            auto [i, lambda] = pwl_segment(z);
            return values_[i] + lambda * (values_[i + 1] - values_[i]);
        }
    }
    return z;
}

double Nonlinearity::deriv(double z) const {
    check_domain(z);
    switch (family_) {
        case Family::identity: return 1.0;
        case Family::scaled_tanh: {
            const double t = std::tanh(a_ * z);
            return a_ * (1.0 - t * t);
        }
        case Family::cubic: return 1.0 + 3.0 * c_ * z * z;
        case Family::monotone_pwl: {
            auto [i, lambda] = pwl_segment(z);
            (void)lambda;
            return (values_[i + 1] - values_[i]) / (knots_[i + 1] - knots_[i]);
        }
    }
    return 1.0;
}

double Nonlinearity::inverse(double x, double tol) const {
    if (!(tol > 0.0)) throw InvalidArgumentError("inverse: tol must be positive");
    double lo = domain_lo_, hi = domain_hi_;
    // For the pwl family the map extrapolates linearly, so widen the bracket
    // beyond the knot span if needed (still inside the declared domain).
    double flo = eval(lo), fhi = eval(hi);
    if (!(x >= flo && x <= fhi))
        throw RangeError("inverse: target " + std::to_string(x) +
                         " outside the image [" + std::to_string(flo) + ", " +
                         std::to_string(fhi) + "]");
    double z = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double f = eval(z);
        if (std::abs(f - x) <= tol) return z;
        if (f < x)
            lo = z;
        else
            hi = z;
        // Newton step when it stays inside the bracket, bisection otherwise.
        const double d = deriv(z);
        double znext = d > 0.0 ? z - (f - x) / d : z;
        if (!(znext > lo && znext < hi)) znext = 0.5 * (lo + hi);
        z = znext;
    }
    return z;
}

std::size_t Nonlinearity::param_count() const {
    switch (family_) {
        case Family::identity: return 0;
        case Family::scaled_tanh: return 1;
        case Family::cubic: return 1;
        case Family::monotone_pwl: return values_.size();
    }
    return 0;
}

void Nonlinearity::param_grad_into(double z, std::span<double> out) const {
    check_domain(z);
    switch (family_) {
        case Family::identity: return;
        case Family::scaled_tanh: {
            const double t = std::tanh(a_ * z);
            out[0] = z * (1.0 - t * t);
            return;
        }
        case Family::cubic: {
            out[0] = z * z * z;
            return;
        }
        case Family::monotone_pwl: {
            std::fill(out.begin(), out.end(), 0.0);
            auto [i, lambda] = pwl_segment(z);
            out[i] = 1.0 - lambda;
            out[i + 1] = lambda;
            return;
        }
    }
}

void Nonlinearity::deriv_param_grad_into(double z, std::span<double> out) const {
    check_domain(z);
    switch (family_) {
        case Family::identity: return;
        case Family::scaled_tanh: {
            // d/da [a (1 - tanh^2(a z))] = (1 - t^2) - 2 a z t (1 - t^2)
            const double t = std::tanh(a_ * z);
            const double sech2 = 1.0 - t * t;
            out[0] = sech2 - 2.0 * a_ * z * t * sech2;
            return;
        }
        case Family::cubic: {
            out[0] = 3.0 * z * z;
            return;
        }
        case Family::monotone_pwl: {
            std::fill(out.begin(), out.end(), 0.0);
            auto [i, lambda] = pwl_segment(z);
            (void)lambda;
            const double inv_dk = 1.0 / (knots_[i + 1] - knots_[i]);
            out[i] = -inv_dk;
            out[i + 1] = inv_dk;
            return;
        }
    }
}

std::vector<double> Nonlinearity::param_grad(double z) const {
    std::vector<double> out(param_count());
    param_grad_into(z, out);
    return out;
}

std::vector<double> Nonlinearity::deriv_param_grad(double z) const {
    std::vector<double> out(param_count());
    deriv_param_grad_into(z, out);
    return out;
}

const std::vector<double>& Nonlinearity::knots() const {
    if (family_ != Family::monotone_pwl)
        throw InvalidArgumentError("knots(): only available for monotone_pwl");
    return knots_;
}

const std::vector<double>& Nonlinearity::values() const {
    if (family_ != Family::monotone_pwl)
        throw InvalidArgumentError("values(): only available for monotone_pwl");
    return values_;
}

Nonlinearity Nonlinearity::with_values(std::vector<double> values) const {
    if (family_ != Family::monotone_pwl)
        throw InvalidArgumentError("with_values(): only available for monotone_pwl");
    return monotone_pwl(knots_, std::move(values)).with_domain(domain_lo_, domain_hi_);
}

}  // namespace pnlbss
