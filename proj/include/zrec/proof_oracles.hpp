#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "zrec/characters.hpp"
#include "zrec/gamma.hpp"
#include "zrec/lfunctions.hpp"
#include "zrec/moments.hpp"
#include "zrec/plan.hpp"
#include "zrec/quadrature.hpp"

namespace zrec {

/// Values of the proof intermediates at s = 0: the regularized moment F(0),
/// its pole-subtraction integral, the three pieces of the decomposition
/// F = F1 + F2 + F3, and the post-approximation cosine-sum form of F2.
struct IntermediateLedger {
    std::complex<double> f0_direct{0.0, 0.0};
    double f0_error = 0.0;
    std::complex<double> pole_correction{0.0, 0.0};
    double pole_error = 0.0;
    double f1_0 = 0.0;
    double f1_error = 0.0;
    double f2_0_exact = 0.0;
    double f2_error = 0.0;
    double f2_0_cos_sum = 0.0;
    double f2_cos_error = 0.0;
    double f3_0 = 0.0;
    double f3_error = 0.0;
    double decomposition_residual = 0.0; // |f0 - (f1 + f2_exact + f3)|
    double approx_gap = 0.0;             // |f2_exact - f2_cos_sum|
    double combined_error_budget = 0.0;
    bool within_budget = true;
};

struct OracleValue {
    double value = 0.0;
    double quadrature_estimate = 0.0;
    double tail_estimate = 0.0;
    double error_estimate = 0.0;
    bool within_tolerance = true;
};

namespace detail {

inline std::vector<long> divisor_counts(long X) {
    std::vector<long> d(std::size_t(X) + 1, 0);
    for (long i = 1; i <= X; ++i)
        for (long j = i; j <= X; j += i) ++d[std::size_t(j)];
    return d;
}

// integral over |y| <= y_max of sin(A e^{2y/T}) [y] e^{-y^2 - y/T} dy,
// optionally with the full complex exponential e^{i A e^{2y/T}} instead of
// its sine.  The local frequency is the exact phase derivative.
inline Integral y_oscillation_integral(double A, double T, bool y_weight, bool complex_form,
                                       const QuadraturePlan& plan) {
    auto envelope = [T, y_weight](double y) {
        const double g = std::exp(-y * y - y / T);
        return y_weight ? y * g : g;
    };
    auto freq = [A, T](double y) { return A * (2.0 / T) * std::exp(2.0 * y / T); };
    if (complex_form) {
        auto f = [A, T, &envelope](double y) {
            const double phase = A * std::exp(2.0 * y / T);
            return std::complex<double>(std::cos(phase), std::sin(phase)) * envelope(y);
        };
        return integrate_panels(f, -plan.y_max, plan.y_max, plan, freq);
    }
    auto f = [A, T, &envelope](double y) {
        return std::sin(A * std::exp(2.0 * y / T)) * envelope(y);
    };
    return integrate_panels(f, -plan.y_max, plan.y_max, plan, freq);
}

enum class SeriesKind { f1, f2_imaginary, f2_sine, f3 };

// Shared engine for the F1/F2/F3 series: coefficient times oscillatory
// y-integral, summed to X = multiplier * T * p / q with a measured-envelope
// tail estimate from the last terms.
inline OracleValue oscillatory_series(SeriesKind kind, const ReciprocityInstance& inst,
                                      const QuadraturePlan& plan) {
    const double T = inst.T;
    const double p = double(inst.p);
    const double q = double(inst.q);
    const long X = std::max<long>(8, long(std::ceil(plan.sum_cutoff_multiplier * T * p / q)));

    const bool double_sum = kind != SeriesKind::f3;
    const bool y_weight = kind == SeriesKind::f2_imaginary || kind == SeriesKind::f2_sine;
    const bool complex_form = kind == SeriesKind::f2_imaginary;

    std::vector<long> d;
    if (double_sum) d = divisor_counts(X);

    double prefactor = 0.0;
    switch (kind) {
        case SeriesKind::f1: prefactor = std::sqrt(p / q) / std::sqrt(std::numbers::pi); break;
        case SeriesKind::f2_imaginary:
        case SeriesKind::f2_sine:
            prefactor = 2.0 * T * std::sqrt(p / q) / std::sqrt(std::numbers::pi);
            break;
        case SeriesKind::f3: prefactor = 2.0 * std::sqrt(p / q) / std::sqrt(std::numbers::pi); break;
    }

    CompensatedSum acc;
    CompensatedSum quad;
    constexpr int window = 16;
    std::array<double, window> recent{};
    for (long k = 1; k <= X; ++k) {
        const double A = 2.0 * std::numbers::pi * double(k) * q / p;
        const Integral integral = y_oscillation_integral(A, T, y_weight, complex_form, plan);
        const double raw = complex_form ? integral.value.imag() : integral.value.real();
        const double coeff = (double_sum ? double(d[std::size_t(k)]) : 1.0) / double(k);
        acc.add(coeff * raw);
        quad.add(coeff * integral.error_estimate);
        recent[std::size_t(k % window)] = std::abs(coeff * raw);
    }

    double window_sum = 0.0;
    for (double v : recent) window_sum += v;

    OracleValue out;
    out.value = prefactor * acc.value();
    out.quadrature_estimate = prefactor * quad.value();
    out.tail_estimate = prefactor * 4.0 * window_sum;
    out.error_estimate = out.quadrature_estimate + out.tail_estimate;
    out.within_tolerance = out.tail_estimate <= plan.target_abs_tol;
    return out;
}

} // namespace detail

/// Direct quadrature of
///   F(0) = integral (p/q)^{it} zeta(1/2-it) (zeta(1/2+it) - (-1/2+it)^{-1}) exp(-t^2/T^2) dt
/// over |t| <= lhs cutoff.
inline Integral f_at_zero_direct(const ReciprocityInstance& inst, const QuadraturePlan& plan = {}) {
    const double xi = inst.twist();
    const double T = inst.T;
    const double cutoff = plan.lhs_cutoff_factor * T;
    auto f = [xi, T, &plan](double t) {
        const std::complex<double> twist(std::cos(t * xi), std::sin(t * xi));
        const std::complex<double> zm = riemann_zeta({0.5, -t}, plan);
        const std::complex<double> zp = riemann_zeta({0.5, t}, plan);
        const std::complex<double> pole = 1.0 / std::complex<double>(-0.5, t);
        return twist * zm * (zp - pole) * std::exp(-(t * t) / (T * T));
    };
    auto freq = [xi](double t) { return detail::lhs_local_frequency(t, std::abs(xi)); };
    return integrate_panels(f, -cutoff, cutoff, plan, freq);
}

/// The subtracted piece: integral of (p/q)^{it} zeta(1/2-it) (-1/2+it)^{-1} exp(-t^2/T^2) dt.
inline Integral pole_correction(const ReciprocityInstance& inst, const QuadraturePlan& plan = {}) {
    const double xi = inst.twist();
    const double T = inst.T;
    const double cutoff = plan.lhs_cutoff_factor * T;
    auto f = [xi, T, &plan](double t) {
        const std::complex<double> twist(std::cos(t * xi), std::sin(t * xi));
        const std::complex<double> zm = riemann_zeta({0.5, -t}, plan);
        return twist * zm / std::complex<double>(-0.5, t) * std::exp(-(t * t) / (T * T));
    };
    auto freq = [xi](double t) { return detail::lhs_local_frequency(t, std::abs(xi)); };
    return integrate_panels(f, -cutoff, cutoff, plan, freq);
}

/// F1(0) = pi^{-1/2} (p/q)^{1/2} sum_{nm<=X} (nm)^{-1}
///           integral e^{-y/T} sin((2 pi nm q / p) e^{2y/T}) e^{-y^2} dy.
inline OracleValue f1_at_zero(const ReciprocityInstance& inst, const QuadraturePlan& plan = {}) {
    return detail::oscillatory_series(detail::SeriesKind::f1, inst, plan);
}

enum class F2Form { imaginary_part, sine };

/// F2(0) in the pre-approximation form
///   (2T/sqrt(pi)) (p/q)^{1/2} sum (nm)^{-1} Im integral e((nm q/p) e^{2y/T}) y e^{-y^2-y/T} dy,
/// or equivalently with Im e(.) written out as the sine.
inline OracleValue f2_at_zero_exact(const ReciprocityInstance& inst, const QuadraturePlan& plan = {},
                                    F2Form form = F2Form::imaginary_part) {
    return detail::oscillatory_series(form == F2Form::imaginary_part
                                          ? detail::SeriesKind::f2_imaginary
                                          : detail::SeriesKind::f2_sine,
                                      inst, plan);
}

/// Raw sum_{k<=X} d(k) cos(2 pi k q / p) exp(-(2 pi k q / (p T))^2), with the
/// cosine phase reduced mod p in integer arithmetic.
inline double cosine_gaussian_sum_raw(long p, long q, double T, long X) {
    CompensatedSum acc;
    const std::vector<long> d = detail::divisor_counts(X);
    for (long k = 1; k <= X; ++k) {
        const double u = 2.0 * std::numbers::pi * double(k) * double(q) / (double(p) * T);
        acc.add(double(d[std::size_t(k)]) * cos_two_pi_rational(std::int64_t(k) * q, p) *
                std::exp(-u * u));
    }
    return acc.value();
}

/// F2(0) after the Taylor approximation step:
///   4 pi (q/p)^{1/2} sum d(k) cos(2 pi k q/p) exp(-(2 pi k q/(p T))^2),
/// truncated where the Gaussian weight falls below 1e-12 of the budget.
inline OracleValue f2_at_zero_cos_sum(const ReciprocityInstance& inst, const QuadraturePlan& plan = {}) {
    const double p = double(inst.p);
    const double q = double(inst.q);
    const double scale = p * inst.T / (2.0 * std::numbers::pi * q); // weight = exp(-(k/scale)^2)
    const long X = long(std::ceil(6.5 * scale)) + 8;
    const double prefactor = 4.0 * std::numbers::pi * std::sqrt(q / p);

    OracleValue out;
    out.value = prefactor * cosine_gaussian_sum_raw(inst.p, inst.q, inst.T, X);
    const double wX = std::exp(-(double(X) / scale) * (double(X) / scale));
    out.tail_estimate = prefactor * 8.0 * double(X) * wX; // crude envelope; wX < 1e-18 here
    out.quadrature_estimate = 1e-15 * std::abs(out.value) * std::sqrt(double(X));
    out.error_estimate = out.quadrature_estimate + out.tail_estimate;
    out.within_tolerance = out.tail_estimate <= plan.target_abs_tol;
    return out;
}

/// F3(0) = 2 pi^{-1/2} (p/q)^{1/2} sum_n n^{-1}
///           integral e^{-y/T} sin((2 pi n q / p) e^{2y/T}) e^{-y^2} dy,
/// the single-sum analogue of F1(0).
inline OracleValue f3_at_zero(const ReciprocityInstance& inst, const QuadraturePlan& plan = {}) {
    return detail::oscillatory_series(detail::SeriesKind::f3, inst, plan);
}

/// Two-path check of F(0) = F1(0) + F2(0) + F3(0); fills the ledger.
inline IntermediateLedger decomposition_check(const ReciprocityInstance& inst,
                                              const QuadraturePlan& plan = {}) {
    IntermediateLedger ledger;

    const Integral f0 = f_at_zero_direct(inst, plan);
    ledger.f0_direct = f0.value;
    ledger.f0_error = f0.error_estimate;

    const Integral pole = pole_correction(inst, plan);
    ledger.pole_correction = pole.value;
    ledger.pole_error = pole.error_estimate;

    const OracleValue f1 = f1_at_zero(inst, plan);
    ledger.f1_0 = f1.value;
    ledger.f1_error = f1.error_estimate;

    const OracleValue f2 = f2_at_zero_exact(inst, plan);
    ledger.f2_0_exact = f2.value;
    ledger.f2_error = f2.error_estimate;

    const OracleValue f2cos = f2_at_zero_cos_sum(inst, plan);
    ledger.f2_0_cos_sum = f2cos.value;
    ledger.f2_cos_error = f2cos.error_estimate;

    const OracleValue f3 = f3_at_zero(inst, plan);
    ledger.f3_0 = f3.value;
    ledger.f3_error = f3.error_estimate;

    ledger.decomposition_residual =
        std::abs(ledger.f0_direct - std::complex<double>(ledger.f1_0 + ledger.f2_0_exact + ledger.f3_0, 0.0));
    ledger.approx_gap = std::abs(ledger.f2_0_exact - ledger.f2_0_cos_sum);
    ledger.combined_error_budget =
        ledger.f0_error + ledger.f1_error + ledger.f2_error + ledger.f3_error + 1e-8;
    ledger.within_budget = ledger.decomposition_residual <= ledger.combined_error_budget;
    return ledger;
}

/// |e(nm p^{-1}/q) - e(-nm q^{-1}/p) e(nm/(pq))| with every phase reduced as
/// an exact rational mod 1 before exponentiation.
inline double additive_reciprocity_check(long n, long m, long p, long q) {
    if (p == q) throw std::invalid_argument("additive_reciprocity_check: p and q must be distinct");
    const long p_inv = modular_inverse(p % q, q);
    const long q_inv = modular_inverse(q % p, p);
    const long M = p * q;

    const __int128 nm = __int128(n) * __int128(m);
    long nm_mod = long(((nm % M) + M) % M);

    const long lhs_num = ((nm_mod % q) * p_inv) % q;
    __int128 rhs = __int128(nm_mod) - __int128(nm_mod) * q_inv * q;
    long rhs_num = long(((rhs % M) + M) % M);

    return std::abs(unit_root(lhs_num, q) - unit_root(rhs_num, M));
}

enum class SplitFault { none, drop_inverse_substitution };

struct SplitCheck {
    double direct = 0.0;
    double reassembled = 0.0;
    double imag_residual = 0.0;
    double difference = 0.0;
};

/// Finite-sum identity behind the residue-class/character split: the direct
/// Gaussian-weighted cosine sum over nm <= X equals the nm = 0 (mod p) part
/// (rewritten by inclusion-exclusion) plus the orthogonality expansion over
/// characters with the r -> r q^{-1} substitution.
inline SplitCheck character_split_check(const ReciprocityInstance& inst, long X,
                                        SplitFault fault = SplitFault::none) {
    if (X < 1) throw std::invalid_argument("character_split_check: X must be positive");
    const long p = inst.p;
    const long q = inst.q;
    const double T = inst.T;
    const std::vector<long> d = detail::divisor_counts(X);
    auto weight = [&](long k) {
        const double u = 2.0 * std::numbers::pi * double(k) * double(q) / (double(p) * T);
        return std::exp(-u * u);
    };

    CompensatedSum direct;
    for (long k = 1; k <= X; ++k)
        direct.add(double(d[std::size_t(k)]) * cos_two_pi_rational(std::int64_t(k) * q, p) * weight(k));

    // nm = 0 (mod p): n = p n' plus m = p m' minus nm = p^2 n'm'.
    CompensatedSum zero_class;
    for (long j = 1; j * p <= X; ++j) zero_class.add(2.0 * double(d[std::size_t(j)]) * weight(p * j));
    for (long j = 1; j * p * p <= X; ++j)
        zero_class.add(-double(d[std::size_t(j)]) * weight(p * p * j));

    const CharacterFamily family(p);
    CompensatedComplexSum char_part;
    for (const DirichletCharacter& chi : family.characters()) {
        std::complex<double> factor = cosine_twisted_sum(chi);
        if (fault == SplitFault::none) factor *= chi(q);
        CompensatedComplexSum series;
        for (long k = 1; k <= X; ++k)
            series.add(double(d[std::size_t(k)]) * chi(k) * weight(k));
        char_part.add(factor * series.value());
    }

    const std::complex<double> reassembled =
        zero_class.value() + char_part.value() / double(p - 1);

    SplitCheck out;
    out.direct = direct.value();
    out.reassembled = reassembled.real();
    out.imag_residual = std::abs(reassembled.imag());
    out.difference = std::abs(std::complex<double>(direct.value(), 0.0) - reassembled);
    return out;
}

struct ResidueCheck {
    double contour = 0.0;
    double closed_form = 0.0;
    double diff = 0.0;
    double imag_residual = 0.0;
    double error_estimate = 0.0;
};

/// Extracts the main term as the residue of the first w-integral of the
/// derivation at its double pole: numerically integrates
///   (q/p)^{1/2} (2 pi i)^{-1} contour-integral of
///     2 pi Gamma(w/2) (T/2pi)^w (2 q^{-w} - (pq)^{-w} - (p-1)^{-1}(p/q)^w (1-p^{-w})^2) zeta(w)^2 dw
/// on |w - 1| = radius and compares against the closed-form main term.
inline ResidueCheck residue_main_term_check(const ReciprocityInstance& inst,
                                            const QuadraturePlan& plan = {}, double radius = 0.25) {
    if (!(radius > 0.0 && radius < 0.5))
        throw std::invalid_argument("residue_main_term_check: radius must lie in (0, 1/2)");
    const double p = double(inst.p);
    const double q = double(inst.q);
    const double T = inst.T;

    auto integrand = [&](double theta) {
        const std::complex<double> offset = radius * std::complex<double>(std::cos(theta), std::sin(theta));
        const std::complex<double> w = 1.0 + offset;
        const std::complex<double> zeta_w = hurwitz_zeta({w.real(), w.imag()}, 1.0, plan);
        const std::complex<double> euler_sq =
            std::pow(1.0 - detail::real_base_pow(p, -w), 2.0);
        const std::complex<double> combo = 2.0 * detail::real_base_pow(q, -w) -
                                           detail::real_base_pow(p * q, -w) -
                                           detail::real_base_pow(p / q, w) * euler_sq / (p - 1.0);
        const std::complex<double> g = 2.0 * std::numbers::pi * complex_gamma(0.5 * w) *
                                       detail::real_base_pow(T / (2.0 * std::numbers::pi), w) *
                                       combo * zeta_w * zeta_w;
        // (1/2pi) f(w) * (dw/dtheta) / i = (1/2pi) f(w) * offset
        return g * offset / (2.0 * std::numbers::pi);
    };
    const Integral loop =
        integrate_panels(integrand, 0.0, 2.0 * std::numbers::pi, plan, [](double) { return 1.0; });

    ResidueCheck out;
    out.contour = std::sqrt(q / p) * loop.value.real();
    out.imag_residual = std::sqrt(q / p) * std::abs(loop.value.imag());
    out.closed_form = main_term(inst);
    out.diff = std::abs(out.contour - out.closed_form);
    out.error_estimate = std::sqrt(q / p) * loop.error_estimate;
    return out;
}

struct MellinPairCheck {
    double max_residual = 0.0;
    std::vector<std::pair<double, double>> cosine_residuals;   // (s, residual)
    std::vector<std::pair<double, double>> gaussian_residuals; // (w, residual)
};

namespace detail {

// integral over x in (0, inf) of x^{-1/2+s} cos x dx, regularized by two
// integrations by parts with the split at pi/2 (where the boundary cosine
// vanishes), against the closed form Gamma(1/2+s) cos(pi(1/4+s/2)).
inline double mellin_cosine_residual(double s, const QuadraturePlan& plan) {
    if (!(s > -0.5 && s < 0.5))
        throw std::domain_error("mellin_cosine_residual: s must lie in (-1/2, 1/2)");

    // A = integral_0^{pi/2} x^{-3/2+s} sin x dx, via x = u^4.
    const double u_top = std::pow(0.5 * std::numbers::pi, 0.25);
    auto head = [s](double u) {
        const double u4 = u * u * u * u;
        const double sinc = u4 < 1e-8 ? 1.0 - u4 * u4 / 6.0 : std::sin(u4) / u4;
        return 4.0 * std::pow(u, 4.0 * s + 1.0) * sinc;
    };
    const double A = integrate_panels(head, 0.0, u_top, plan).real();

    // C = integral_{pi/2}^inf x^{-5/2+s} cos x dx
    //   = -(pi/2)^{-5/2+s} + (5/2-s) integral_{pi/2}^inf x^{-7/2+s} sin x dx.
    const double far_cut = 1000.0;
    auto far = [s](double x) { return std::pow(x, -3.5 + s) * std::sin(x); };
    const double D =
        integrate_panels(far, 0.5 * std::numbers::pi, far_cut, plan, [](double) { return 1.0; }).real();
    const double C = -std::pow(0.5 * std::numbers::pi, -2.5 + s) + (2.5 - s) * D;

    const double lhs = -(s - 0.5) * (A + (s - 1.5) * C);
    const double rhs = complex_gamma(std::complex<double>(0.5 + s, 0.0)).real() *
                       std::cos(std::numbers::pi * (0.25 + 0.5 * s));
    return std::abs(lhs - rhs);
}

// |integral_0^inf x^{w-1} exp(-(x/lambda)^2) dx - lambda^w Gamma(w/2)/2|.
inline double mellin_gaussian_residual(double w, double lambda, const QuadraturePlan& plan) {
    auto f = [w, lambda](double x) { return std::pow(x, w - 1.0) * std::exp(-(x / lambda) * (x / lambda)); };
    const double value = integrate_panels(f, 0.0, 8.0 * lambda, plan).real();
    const double closed =
        0.5 * std::pow(lambda, w) * complex_gamma(std::complex<double>(0.5 * w, 0.0)).real();
    return std::abs(value - closed);
}

} // namespace detail

/// Residuals of the two Mellin pairs the derivation leans on: the
/// conditionally convergent cosine transform (split form) and the Gaussian
/// pair that opens the weight as a w-integral.
inline MellinPairCheck mellin_pair_check(std::span<const double> s_samples,
                                         const QuadraturePlan& plan = {}) {
    MellinPairCheck out;
    for (double s : s_samples) {
        const double r = detail::mellin_cosine_residual(s, plan);
        out.cosine_residuals.emplace_back(s, r);
        out.max_residual = std::max(out.max_residual, r);
    }
    const double t_scale = 40.0 / (2.0 * std::numbers::pi);
    const std::array<std::pair<double, double>, 3> gaussian_samples{
        {{2.0, 1.0}, {2.0, t_scale}, {3.0, 1.0}}};
    for (auto [w, lambda] : gaussian_samples) {
        const double r = detail::mellin_gaussian_residual(w, lambda, plan);
        out.gaussian_residuals.emplace_back(w, r);
        out.max_residual = std::max(out.max_residual, r);
    }
    return out;
}

inline MellinPairCheck mellin_pair_check(const QuadraturePlan& plan = {}) {
    const std::array<double, 2> samples{0.0, 0.25};
    return mellin_pair_check(std::span<const double>(samples), plan);
}

} // namespace zrec
