#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "zrec/characters.hpp"
#include "zrec/gamma.hpp"
#include "zrec/lfunctions.hpp"
#include "zrec/plan.hpp"
#include "zrec/quadrature.hpp"

namespace zrec {

/// One instance (p, q, T) of the reciprocity relation.
struct ReciprocityInstance {
    long p;
    long q;
    double T;

    ReciprocityInstance(long p_, long q_, double T_) : p(p_), q(q_), T(T_) {
        if (!is_odd_prime(p)) throw std::invalid_argument("ReciprocityInstance: p must be an odd prime");
        if (!is_odd_prime(q)) throw std::invalid_argument("ReciprocityInstance: q must be an odd prime");
        if (p == q) throw std::invalid_argument("ReciprocityInstance: p and q must be distinct");
        if (!(T > 1.0)) throw std::invalid_argument("ReciprocityInstance: T must exceed 1");
    }

    ReciprocityInstance swapped() const { return {q, p, T}; }
    /// log(p/q), formed as log p - log q so the swapped instance gets the
    /// exact negation.
    double twist() const { return std::log(double(p)) - std::log(double(q)); }
};

struct MomentReport {
    long p = 0;
    long q = 0;
    double T = 0.0;
    double lhs = 0.0;
    double main = 0.0;
    double dual = 0.0;
    double dual_imag_residual = 0.0;
    double residual = 0.0;            // lhs - main - dual, exactly as computed
    double bound_scale = 0.0;         // sqrt(q/p) + sqrt(p/q)
    double normalized_residual = 0.0; // residual / bound_scale
    double quadrature_error_estimate = 0.0;
};

namespace detail {

// Twist frequency plus zeta's local rotation rate, for panel sizing.
inline double lhs_local_frequency(double t, double twist_abs) {
    const double rotation = 0.5 * std::log((std::abs(t) + 2.0) / (2.0 * std::numbers::pi));
    return twist_abs + std::max(0.0, rotation);
}

inline double dual_local_frequency(double t, double twist_abs, long p) {
    const double l_rotation = 0.5 * std::log(double(p) * (std::abs(t) + 2.0) / (2.0 * std::numbers::pi));
    const double gamma_rotation = 0.5 * std::log(0.5 * (std::abs(t) + 2.0));
    return twist_abs + std::max(0.0, l_rotation) + std::max(0.0, gamma_rotation);
}

} // namespace detail

/// 2 * integral over [0, cutoff] of cos(t log(p/q)) |zeta(1/2+it)|^2 exp(-t^2/T^2),
/// the even-pairing form of the two-sided twisted moment.
inline Integral lhs_moment_integral(const ReciprocityInstance& inst, const QuadraturePlan& plan = {}) {
    const double xi = inst.twist();
    const double T = inst.T;
    const double cutoff = plan.lhs_cutoff_factor * T;
    auto f = [xi, T, &plan](double t) {
        const double z2 = std::norm(riemann_zeta({0.5, t}, plan));
        return 2.0 * std::cos(t * xi) * z2 * std::exp(-(t * t) / (T * T));
    };
    auto freq = [xi](double t) { return detail::lhs_local_frequency(t, std::abs(xi)); };
    return integrate_panels(f, 0.0, cutoff, plan, freq);
}

inline double lhs_moment(const ReciprocityInstance& inst, const QuadraturePlan& plan = {}) {
    return lhs_moment_integral(inst, plan).real();
}

/// sqrt(pi/(pq)) T (log(T/(2 pi p q)) + 2 gamma + psi(1/2)/2); closed form.
inline double main_term(const ReciprocityInstance& inst) {
    const double pq = double(inst.p) * double(inst.q);
    const double bracket =
        std::log(inst.T / (2.0 * std::numbers::pi * pq)) + 2.0 * euler_gamma + 0.5 * digamma(0.5);
    return std::sqrt(std::numbers::pi / pq) * inst.T * bracket;
}

/// integral over [-dual_cutoff, dual_cutoff] of
///   Gamma((1-2it)/4) (T/(2q))^{it} |L(1/2+it, chi)|^2 dt
/// for one character mod p.
inline Integral dual_character_integral(const ReciprocityInstance& inst, const DirichletCharacter& chi,
                                        const QuadraturePlan& plan = {}) {
    const double T = inst.T;
    const double log_t2q = std::log(T / (2.0 * double(inst.q)));
    auto f = [&](double t) {
        const std::complex<double> gamma_factor = complex_gamma({0.25, -0.5 * t});
        const std::complex<double> phase(std::cos(t * log_t2q), std::sin(t * log_t2q));
        const double l2 = std::norm(dirichlet_l({0.5, t}, chi, plan));
        return gamma_factor * phase * l2;
    };
    const long p = inst.p;
    auto freq = [log_t2q, p](double t) {
        return detail::dual_local_frequency(t, std::abs(log_t2q), p);
    };
    return integrate_panels(f, -plan.dual_cutoff, plan.dual_cutoff, plan, freq);
}

struct CharacterMomentSum {
    double value = 0.0;
    double imag_residual = 0.0;
    double error_estimate = 0.0;
};

/// sqrt(p)/(p-1) * sum over even non-principal chi mod p of chi(q) I(chi),
/// the dual moment without its (T/2pi)^{1/2} prefactor (the normalization
/// of the corollary).  Conjugate characters are paired: the chi-bar term is
/// the complex conjugate of the chi term, so only one integral per pair runs.
inline CharacterMomentSum character_moment_sum(const ReciprocityInstance& inst,
                                               const QuadraturePlan& plan = {}) {
    const long p = inst.p;
    const CharacterFamily family(p);
    const double prefactor = std::sqrt(double(p)) / double(p - 1);

    CompensatedComplexSum acc;
    CompensatedSum err;
    for (int j = 2; j <= int(p - 1) - j; j += 2) {
        const DirichletCharacter& chi = family.character(j);
        const Integral integral = dual_character_integral(inst, chi, plan);
        const std::complex<double> contribution = chi(inst.q) * integral.value;
        if (j == int(p - 1) - j) {
            acc.add(contribution);
            err.add(integral.error_estimate);
        } else {
            acc.add(contribution + std::conj(contribution));
            err.add(2.0 * integral.error_estimate);
        }
    }

    CharacterMomentSum out;
    out.value = prefactor * acc.value().real();
    out.imag_residual = prefactor * std::abs(acc.value().imag());
    out.error_estimate = prefactor * err.value();
    return out;
}

struct DualMoment {
    double value = 0.0;
    double imag_residual = 0.0;
    double error_estimate = 0.0;
};

/// The full dual moment of the reciprocity relation,
/// (T/2pi)^{1/2} sqrt(p)/(p-1) sum* chi(q) integral(...).
/// Empty (exactly zero) when p = 3: mod 3 there is no even non-principal
/// character.
inline DualMoment dual_moment(const ReciprocityInstance& inst, const QuadraturePlan& plan = {}) {
    const CharacterMomentSum sum = character_moment_sum(inst, plan);
    const double prefactor = std::sqrt(inst.T / (2.0 * std::numbers::pi));
    return {prefactor * sum.value, prefactor * sum.imag_residual, prefactor * sum.error_estimate};
}

inline MomentReport verify_theorem(const ReciprocityInstance& inst, const QuadraturePlan& plan = {}) {
    MomentReport report;
    report.p = inst.p;
    report.q = inst.q;
    report.T = inst.T;

    const Integral lhs = lhs_moment_integral(inst, plan);
    const DualMoment dual = dual_moment(inst, plan);

    report.lhs = lhs.real();
    report.main = main_term(inst);
    report.dual = dual.value;
    report.dual_imag_residual = dual.imag_residual;
    report.residual = report.lhs - report.main - report.dual;
    report.bound_scale = std::sqrt(double(inst.q) / double(inst.p)) +
                         std::sqrt(double(inst.p) / double(inst.q));
    report.normalized_residual = report.residual / report.bound_scale;
    report.quadrature_error_estimate = lhs.error_estimate + dual.error_estimate;
    return report;
}

struct CorollaryReport {
    long p = 0;
    long q = 0;
    double T = 0.0;
    double forward = 0.0;     // D(p, q)
    double reverse = 0.0;     // D(q, p)
    double difference = 0.0;  // D(p, q) - D(q, p)
    double bound_scale = 0.0; // sqrt(q/(pT)) + sqrt(p/(qT))
    double normalized_difference = 0.0;
    double imag_residual = 0.0;
    double quadrature_error_estimate = 0.0;
};

/// D(p, q) - D(q, p) where D is the character-moment expression of the
/// corollary.  Antisymmetric by construction: swapping the arguments negates
/// the difference bit-exactly.
inline CorollaryReport verify_corollary(long p, long q, double T, const QuadraturePlan& plan = {}) {
    const ReciprocityInstance forward_inst(p, q, T);
    const ReciprocityInstance reverse_inst(q, p, T);
    const CharacterMomentSum forward = character_moment_sum(forward_inst, plan);
    const CharacterMomentSum reverse = character_moment_sum(reverse_inst, plan);

    CorollaryReport report;
    report.p = p;
    report.q = q;
    report.T = T;
    report.forward = forward.value;
    report.reverse = reverse.value;
    report.difference = forward.value - reverse.value;
    report.bound_scale = std::sqrt(double(q) / (double(p) * T)) + std::sqrt(double(p) / (double(q) * T));
    report.normalized_difference = report.difference / report.bound_scale;
    report.imag_residual = std::max(forward.imag_residual, reverse.imag_residual);
    report.quadrature_error_estimate = forward.error_estimate + reverse.error_estimate;
    return report;
}

} // namespace zrec
