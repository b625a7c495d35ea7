#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zrec/plan.hpp"
#include "zrec/quadrature.hpp"

namespace zrec {

/// pi^{-1/2} * integral of e^{i t xi} exp(-t^2/T^2) dt = T exp(-T^2 xi^2 / 4).
inline double gaussian_window_transform(double xi, double T) {
    if (!(T > 0.0)) throw std::domain_error("gaussian_window_transform: requires T > 0");
    const double u = 0.5 * T * xi;
    return T * std::exp(-u * u);
}

/// pi^{-1/2} * integral of i t e^{i t xi} exp(-t^2/T^2) dt
///   = -(T^3/2) xi exp(-T^2 xi^2 / 4).
inline double gaussian_window_transform_weighted(double xi, double T) {
    if (!(T > 0.0)) throw std::domain_error("gaussian_window_transform_weighted: requires T > 0");
    const double u = 0.5 * T * xi;
    return -0.5 * T * T * T * xi * std::exp(-u * u);
}

/// Quadrature of the defining integral, for cross-checking the closed form.
inline Integral gaussian_window_transform_quadrature(double xi, double T,
                                                     const QuadraturePlan& plan = {}) {
    if (!(T > 0.0)) throw std::domain_error("gaussian_window_transform_quadrature: requires T > 0");
    const double cutoff = plan.lhs_cutoff_factor * T;
    auto f = [xi, T](double t) { return 2.0 * std::cos(t * xi) * std::exp(-(t * t) / (T * T)); };
    auto freq = [xi](double) { return std::abs(xi); };
    Integral r = integrate_panels(f, 0.0, cutoff, plan, freq);
    r.value /= std::sqrt(std::numbers::pi);
    r.error_estimate /= std::sqrt(std::numbers::pi);
    return r;
}

inline Integral gaussian_window_transform_weighted_quadrature(double xi, double T,
                                                              const QuadraturePlan& plan = {}) {
    if (!(T > 0.0))
        throw std::domain_error("gaussian_window_transform_weighted_quadrature: requires T > 0");
    const double cutoff = plan.lhs_cutoff_factor * T;
    auto f = [xi, T](double t) { return -2.0 * t * std::sin(t * xi) * std::exp(-(t * t) / (T * T)); };
    auto freq = [xi](double) { return std::abs(xi); };
    Integral r = integrate_panels(f, 0.0, cutoff, plan, freq);
    r.value /= std::sqrt(std::numbers::pi);
    r.error_estimate /= std::sqrt(std::numbers::pi);
    return r;
}

} // namespace zrec
