#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "zrec/characters.hpp"
#include "zrec/gamma.hpp"
#include "zrec/plan.hpp"
#include "zrec/summation.hpp"

namespace zrec {

/// A point s = sigma + i t in the supported evaluation strip.
struct CriticalPoint {
    double sigma = 0.5;
    double t = 0.0;
    std::complex<double> s() const { return {sigma, t}; }
};

namespace detail {

// x^e for real x > 0 and complex e.
inline std::complex<double> real_base_pow(double x, std::complex<double> e) {
    const double lx = std::log(x);
    const double mag = std::exp(e.real() * lx);
    const double phase = e.imag() * lx;
    return {mag * std::cos(phase), mag * std::sin(phase)};
}

// B_{2k}/(2k)! via 2 (-1)^{k+1} zeta(2k) / (2 pi)^{2k}, with zeta(2k)
// summed to 10^3 and corrected by its own (rapidly convergent) tail
// expansion; accurate to rounding.
inline double bernoulli_over_factorial(int k) {
    static const std::vector<double> table = [] {
        std::vector<double> v(64, 0.0);
        for (int kk = 1; kk < 64; ++kk) {
            const double s = 2.0 * kk;
            const double J = 1000.0;
            double head = 0.0;
            for (int j = 999; j >= 2; --j) head += std::pow(double(j), -s);
            const double tail = std::pow(J, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(J, -s) +
                                (s / 12.0) * std::pow(J, -s - 1.0) -
                                (s * (s + 1.0) * (s + 2.0) / 720.0) * std::pow(J, -s - 3.0);
            const double zeta2k = 1.0 + head + tail;
            const double sign = (kk % 2 == 1) ? 1.0 : -1.0;
            v[std::size_t(kk)] = sign * 2.0 * zeta2k / std::pow(2.0 * std::numbers::pi, s);
        }
        return v;
    }();
    return table.at(std::size_t(k));
}

} // namespace detail

/// Hurwitz zeta by Euler-Maclaurin summation:
///   zeta(s, a) = sum_{n<N} (n+a)^{-s} + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
///                + sum_k B_{2k}/(2k)! (s)_{2k-1} (N+a)^{-s-2k+1}
/// with N = max(em_start, ceil(1.3 |t|)).
inline std::complex<double> hurwitz_zeta(const CriticalPoint& point, double a,
                                         const QuadraturePlan& plan = {}) {
    if (!(a > 0.0) || a > 1.0) throw std::domain_error("hurwitz_zeta: requires 0 < a <= 1");
    if (point.sigma == 1.0 && point.t == 0.0)
        throw std::domain_error("hurwitz_zeta: pole at s = 1");
    if (point.sigma < -2.0 || point.sigma > 3.0)
        throw std::domain_error("hurwitz_zeta: sigma outside supported [-2, 3]");
    if (std::abs(point.t) > 2.0e4)
        throw std::domain_error("hurwitz_zeta: |t| outside supported range");

    const std::complex<double> s = point.s();
    const long N = std::max(long(plan.em_start), long(std::ceil(1.3 * std::abs(point.t))));

    CompensatedComplexSum head;
    for (long n = 0; n < N; ++n) head.add(detail::real_base_pow(double(n) + a, -s));

    const double base = double(N) + a;
    const std::complex<double> base_pow = detail::real_base_pow(base, -s); // (N+a)^{-s}
    std::complex<double> tail = base_pow * base / (s - 1.0) + 0.5 * base_pow;

    // Bernoulli corrections, built iteratively to avoid huge intermediates:
    // P_1 = s (N+a)^{-s-1}, P_{k+1} = P_k (s+2k-1)(s+2k) / (N+a)^2.
    std::complex<double> rising = s * base_pow / base;
    const double inv_base2 = 1.0 / (base * base);
    CompensatedComplexSum corrections;
    for (int k = 1; k <= plan.em_bernoulli_terms; ++k) {
        corrections.add(detail::bernoulli_over_factorial(k) * rising);
        rising *= (s + double(2 * k - 1)) * (s + double(2 * k)) * inv_base2;
    }

    return head.value() + tail + corrections.value();
}

inline std::complex<double> riemann_zeta(const CriticalPoint& point, const QuadraturePlan& plan = {}) {
    if (point.sigma == 1.0 && point.t == 0.0)
        throw std::domain_error("riemann_zeta: pole at s = 1");
    return hurwitz_zeta(point, 1.0, plan);
}

/// L(s, chi) = p^{-s} sum_{a=1}^{p-1} chi(a) zeta(s, a/p).
/// At s = 1 the simple poles of the Hurwitz terms cancel for non-principal
/// chi and the limit is -(1/p) sum_a chi(a) psi(a/p).
inline std::complex<double> dirichlet_l(const CriticalPoint& point, const DirichletCharacter& chi,
                                        const QuadraturePlan& plan = {}) {
    const long p = chi.modulus();
    if (point.sigma == 1.0 && point.t == 0.0) {
        if (chi.is_principal())
            throw std::domain_error("dirichlet_l: pole at s = 1 for the principal character");
        CompensatedComplexSum acc;
        for (long a = 1; a < p; ++a) acc.add(chi(a) * digamma(double(a) / double(p)));
        return -acc.value() / double(p);
    }
    const std::complex<double> s = point.s();
    CompensatedComplexSum acc;
    for (long a = 1; a < p; ++a)
        acc.add(chi(a) * hurwitz_zeta(point, double(a) / double(p), plan));
    return detail::real_base_pow(double(p), -s) * acc.value();
}

/// The zeta functional-equation factor in the gamma-ratio form:
/// zeta(1/2 - i t) = pi^{-i t} Gamma(1/4 + i t/2)/Gamma(1/4 - i t/2) zeta(1/2 + i t).
/// Evaluated through log-gamma so large |t| neither overflows nor underflows.
inline std::complex<double> zeta_chi_factor_gamma_ratio(double t) {
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> log_ratio = complex_log_gamma(std::complex<double>(0.25, 0.5 * t)) -
                                           complex_log_gamma(std::complex<double>(0.25, -0.5 * t));
    return std::exp(-i * t * std::log(std::numbers::pi) + log_ratio);
}

/// The same factor after the reflection and duplication formulae:
/// 2 (2 pi)^{-1/2 - i t} cos(pi (1/4 + i t/2)) Gamma(1/2 + i t).
/// Direct evaluation; the cosine factor limits this form to |t| <= ~350.
inline std::complex<double> zeta_chi_factor_cos_gamma(double t) {
    if (std::abs(t) > 350.0)
        throw std::domain_error("zeta_chi_factor_cos_gamma: |t| too large for direct evaluation");
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> exponent = (-0.5 - i * t) * std::log(2.0 * std::numbers::pi);
    const std::complex<double> c = std::cos(std::numbers::pi * std::complex<double>(0.25, 0.5 * t));
    return 2.0 * std::exp(exponent) * c * complex_gamma(std::complex<double>(0.5, t));
}

/// |zeta(1/2 - i t) - chi_factor(t) * zeta(1/2 + i t)|, two independent
/// evaluations tied together by the functional equation.
inline double zeta_fe_residual(double t, const QuadraturePlan& plan = {}) {
    const std::complex<double> lhs = riemann_zeta({0.5, -t}, plan);
    const std::complex<double> rhs = zeta_chi_factor_gamma_ratio(t) * riemann_zeta({0.5, t}, plan);
    return std::abs(lhs - rhs);
}

/// Residual of the even-character functional equation as assembled in the
/// dual-moment derivation:
///   tau(chi-bar) L(1/2+it, chi)^2
///     = p^{1/2} (p/pi)^{-it} Gamma((1-2it)/4)/Gamma((1+2it)/4) |L(1/2+it, chi)|^2.
inline double dirichlet_fe_residual(double t, const DirichletCharacter& chi,
                                    const QuadraturePlan& plan = {}) {
    if (chi.parity() != 1 || chi.is_principal())
        throw std::domain_error("dirichlet_fe_residual: requires an even non-principal character");
    const long p = chi.modulus();
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> L = dirichlet_l({0.5, t}, chi, plan);
    const std::complex<double> lhs = gauss_sum(chi.conjugate()) * L * L;
    const std::complex<double> log_ratio = complex_log_gamma(std::complex<double>(0.25, -0.5 * t)) -
                                           complex_log_gamma(std::complex<double>(0.25, 0.5 * t));
    const std::complex<double> phase =
        std::exp(-i * t * std::log(double(p) / std::numbers::pi) + log_ratio);
    const std::complex<double> rhs = std::sqrt(double(p)) * phase * std::norm(L);
    return std::abs(lhs - rhs);
}

} // namespace zrec
