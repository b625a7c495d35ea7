#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "zrec/plan.hpp"
#include "zrec/summation.hpp"

namespace zrec {

namespace detail {

struct GaussRule {
    std::vector<double> nodes;   // on (-1, 1)
    std::vector<double> weights;
};

/// Gauss-Legendre nodes and weights by Newton iteration on P_n.
inline GaussRule make_gauss_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_n(x) and P_n'(x).
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;            // ascending order
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

inline const GaussRule& gauss_rule(int n) {
    static const GaussRule r4 = make_gauss_rule(4);
    static const GaussRule r8 = make_gauss_rule(8);
    static const GaussRule r16 = make_gauss_rule(16);
    static const GaussRule r32 = make_gauss_rule(32);
    switch (n) {
        case 4: return r4;
        case 8: return r8;
        case 16: return r16;
        case 32: return r32;
        default: throw std::invalid_argument("gauss_rule: supported orders are 4, 8, 16, 32");
    }
}

template <class F>
std::complex<double> apply_rule(F&& f, double a, double b, const GaussRule& rule) {
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    CompensatedComplexSum acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const std::complex<double> v = f(mid + hw * rule.nodes[i]);
        acc.add(rule.weights[i] * v);
    }
    return hw * acc.value();
}

} // namespace detail

struct Integral {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    long panels = 0;
    bool within_tolerance = true;

    double real() const { return value.real(); }
};

/// Composite fixed-order panel quadrature on [a, b].
///
/// Panel widths shrink as 1/(1 + local_frequency), where local_frequency
/// estimates d(arg)/dt of the integrand at the panel's left edge.  Each panel
/// is evaluated once whole and once as two halves; the half-panel sum is the
/// result and the accumulated coarse/fine discrepancy is the error estimate.
/// Node ordering and the reduction order are fixed, so the output is
/// deterministic.
template <class F, class Freq>
Integral integrate_panels(F&& f, double a, double b, const QuadraturePlan& plan, Freq&& local_frequency) {
    if (!(a < b)) throw std::invalid_argument("integrate_panels: requires a < b");
    plan.validate();
    const detail::GaussRule& rule = detail::gauss_rule(plan.nodes_per_panel);

    Integral result;
    CompensatedComplexSum total;
    CompensatedSum err;
    CompensatedSum magnitude;

    double x = a;
    const long max_panels = 20'000'000;
    while (x < b) {
        const double freq = std::clamp(local_frequency(x), 0.0, 1e9);
        double w = plan.panel_width / (1.0 + freq);
        if (x + w > b) w = b - x;
        if (w <= 0.0) break;

        const std::complex<double> coarse = detail::apply_rule(f, x, x + w, rule);
        const std::complex<double> left = detail::apply_rule(f, x, x + 0.5 * w, rule);
        const std::complex<double> right = detail::apply_rule(f, x + 0.5 * w, x + w, rule);
        const std::complex<double> fine = left + right;

        total.add(fine);
        err.add(std::abs(coarse - fine));
        magnitude.add(std::abs(left) + std::abs(right));
        ++result.panels;
        if (result.panels > max_panels)
            throw std::runtime_error("integrate_panels: panel budget exceeded");
        x += w;
    }

    result.value = total.value();
    // Rounding floor: the error estimate never drops below accumulation noise.
    result.error_estimate = std::max(err.value(), 4e-16 * magnitude.value());
    result.within_tolerance = result.error_estimate <= plan.target_abs_tol;
    return result;
}

template <class F>
Integral integrate_panels(F&& f, double a, double b, const QuadraturePlan& plan) {
    return integrate_panels(std::forward<F>(f), a, b, plan, [](double) { return 0.0; });
}

} // namespace zrec
