#pragma once

#include <stdexcept>

namespace zrec {

/// All truncation and discretization knobs used by the integrals and sums.
///
/// Defaults are sized so that every discarded tail is below the global
/// 1e-9 absolute error budget per top-level quantity:
///   - lhs_cutoff_factor = 7   -> Gaussian weight tail exp(-49) < 1e-21
///   - dual_cutoff = 60        -> gamma-factor tail exp(-15*pi) < 1e-20
///   - y_max = 6               -> exp(-36) < 3e-16
struct QuadraturePlan {
    double lhs_cutoff_factor = 7.0;    // t-integrals truncated at |t| <= factor*T
    double dual_cutoff = 60.0;         // absolute t-bound for the dual integral
    double panel_width = 2.0;          // base panel length, shrunk by 1/(1+frequency)
    int nodes_per_panel = 16;          // Gauss-Legendre nodes per panel
    int em_start = 25;                 // minimum Euler-Maclaurin split point N
    int em_bernoulli_terms = 15;       // Bernoulli correction terms
    double sum_cutoff_multiplier = 8.0;// nm-sums truncated at multiplier*T*p/q
    double y_max = 6.0;                // half-width of the y-integration window
    double target_abs_tol = 1e-9;      // absolute tolerance goal per integral

    void validate() const {
        if (nodes_per_panel < 1 || em_start < 1 || em_bernoulli_terms < 1)
            throw std::invalid_argument("QuadraturePlan: counts must be >= 1");
        if (lhs_cutoff_factor < 5.0)
            throw std::invalid_argument("QuadraturePlan: lhs_cutoff_factor must be >= 5");
        if (dual_cutoff < 40.0)
            throw std::invalid_argument("QuadraturePlan: dual_cutoff must be >= 40");
        if (!(target_abs_tol > 0.0))
            throw std::invalid_argument("QuadraturePlan: target_abs_tol must be > 0");
        if (!(panel_width > 0.0) || !(y_max > 0.0) || !(sum_cutoff_multiplier > 0.0))
            throw std::invalid_argument("QuadraturePlan: widths and multipliers must be > 0");
    }
};

} // namespace zrec
