#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "oracles.hpp"
#include "zrec/calibration.hpp"
#include "zrec/moments.hpp"

using namespace zrec;
using std::numbers::pi;

TEST_CASE("instance validation") {
    REQUIRE_THROWS_AS(ReciprocityInstance(4, 5, 10.0), std::invalid_argument);
    REQUIRE_THROWS_AS(ReciprocityInstance(3, 3, 10.0), std::invalid_argument);
    REQUIRE_THROWS_AS(ReciprocityInstance(3, 9, 10.0), std::invalid_argument);
    REQUIRE_THROWS_AS(ReciprocityInstance(3, 5, 1.0), std::invalid_argument);
    REQUIRE_NOTHROW(ReciprocityInstance(3, 5, 1.0001));
}

TEST_CASE("main term closed form") {
    const ReciprocityInstance a(3, 5, 100.0);
    const ReciprocityInstance b(5, 3, 100.0);
    REQUIRE(main_term(a) == main_term(b)); // p, q enter through pq only

    // zero crossing at T = 2 pi p q exp(-2 gamma - psi(1/2)/2)
    const double t_zero = 2.0 * pi * 15.0 *
                          std::exp(-2.0 * euler_gamma - 0.5 * digamma(0.5));
    const ReciprocityInstance at_zero(3, 5, t_zero);
    REQUIRE(std::abs(main_term(at_zero)) < 1e-10 * t_zero);

    // independently sourced constants: gamma and psi(1/2) = -gamma - 2 ln 2
    const double gamma_ref = 0.5772156649015328606065120900824024;
    const double psi_half_ref = -gamma_ref - 2.0 * std::log(2.0);
    const double reference = std::sqrt(pi / 15.0) * 100.0 *
                             (std::log(100.0 / (2.0 * pi * 15.0)) + 2.0 * gamma_ref + 0.5 * psi_half_ref);
    REQUIRE(std::abs(main_term(a) - reference) < 1e-12 * std::abs(reference));
}

TEST_CASE("lhs moment against an independent oracle") {
    // different quadrature scheme (adaptive Simpson) and different zeta code
    // path (accelerated eta series)
    for (double T : {1.25, 2.0}) {
        const ReciprocityInstance inst(3, 5, T);
        const double xi = std::log(3.0) - std::log(5.0);
        auto f = [&](double t) {
            return 2.0 * std::cos(t * xi) * std::norm(oracles::eta_series_zeta({0.5, t})) *
                   std::exp(-t * t / (T * T));
        };
        const double oracle = oracles::adaptive_simpson(f, 0.0, 7.0 * T, 1e-12);
        REQUIRE(std::abs(lhs_moment(inst) - oracle) < 1e-8);
    }
}

TEST_CASE("lhs moment p-q symmetry and envelope bound") {
    QuadraturePlan plan;
    for (auto [p, q] : {std::pair<long, long>{3, 5}, {5, 7}}) {
        const ReciprocityInstance inst(p, q, 20.0);
        const double direct = lhs_moment(inst, plan);
        const double swapped = lhs_moment(inst.swapped(), plan);
        REQUIRE(std::abs(direct - swapped) < 1e-9);

        // envelope: |lhs| <= 2 int |zeta|^2 exp(-t^2/T^2)
        auto envelope_integrand = [&](double t) {
            return 2.0 * std::norm(riemann_zeta({0.5, t}, plan)) * std::exp(-t * t / 400.0);
        };
        const double envelope =
            integrate_panels(envelope_integrand, 0.0, 140.0, plan,
                             [](double t) { return detail::lhs_local_frequency(t, 0.0); })
                .real();
        REQUIRE(std::abs(direct) <= envelope + 1e-9);
    }
}

TEST_CASE("dual moment structure") {
    QuadraturePlan plan;

    // p = 3: no even non-principal characters, so the dual sum is empty
    const DualMoment empty = dual_moment({3, 5, 40.0}, plan);
    REQUIRE(empty.value == 0.0);
    REQUIRE(empty.imag_residual == 0.0);

    // realness diagnostic on instances with a self-conjugate character
    const DualMoment d5 = dual_moment({5, 3, 50.0}, plan);
    REQUIRE(d5.imag_residual < 1e-9);

    // term-by-term oracle recomputation with halved panel width
    QuadraturePlan refined = plan;
    refined.panel_width = 0.5 * plan.panel_width;
    const DualMoment d5_refined = dual_moment({5, 3, 50.0}, refined);
    REQUIRE(std::abs(d5.value - d5_refined.value) < 1e-8);

    // frozen external reference (mpmath, 25 digits: Hurwitz-zeta L-values and
    // tanh-sinh quadrature of the same integral)
    REQUIRE(std::abs(d5.value - 0.1869947229515553) < 1e-12);
    const CharacterFamily f5(5);
    const Integral I = dual_character_integral({5, 3, 50.0}, f5.character(2), plan);
    REQUIRE(std::abs(I.value.real() + 0.1185794063971476) < 1e-12);
}

TEST_CASE("dual character integral conjugation") {
    // I(chi-bar) = conj(I(chi)): the pairing shortcut inside dual_moment is
    // checked here against two independently computed integrals.
    QuadraturePlan plan;
    plan.dual_cutoff = 40.0;
    const ReciprocityInstance inst(13, 3, 20.0);
    const CharacterFamily family(13);
    const Integral direct = dual_character_integral(inst, family.character(2), plan);
    const Integral conjugated = dual_character_integral(inst, family.character(10), plan);
    REQUIRE(std::abs(conjugated.value - std::conj(direct.value)) < 1e-9);
}

TEST_CASE("theorem report bookkeeping") {
    const ReciprocityInstance inst(5, 3, 20.0);
    const MomentReport rep = verify_theorem(inst);
    REQUIRE(rep.residual == rep.lhs - rep.main - rep.dual);
    REQUIRE(rep.bound_scale >= 2.0);
    REQUIRE(rep.normalized_residual == rep.residual / rep.bound_scale);
    REQUIRE(std::abs(rep.normalized_residual) <= 1.5 * calibration::theorem_normalized_residual);
    REQUIRE(rep.dual_imag_residual <= 1e-9);
}

TEST_CASE("swapping p and q moves the residual by at most the corollary scale") {
    QuadraturePlan plan;
    const MomentReport fwd = verify_theorem({5, 3, 20.0}, plan);
    const MomentReport rev = verify_theorem({3, 5, 20.0}, plan);
    const CorollaryReport cor = verify_corollary(5, 3, 20.0, plan);
    const double swap_gap = std::abs(fwd.residual - rev.residual);
    const double allowance = std::sqrt(20.0 / (2.0 * pi)) * 1.5 *
                             calibration::corollary_normalized_difference * cor.bound_scale;
    REQUIRE(swap_gap <= allowance + 1e-9);
    // and the gap is exactly the dual-moment difference, lhs and main being symmetric
    REQUIRE(std::abs(swap_gap - std::abs(fwd.dual - rev.dual)) < 1e-9);
}

TEST_CASE("corollary antisymmetry and decay in T") {
    QuadraturePlan plan;
    const CorollaryReport ab = verify_corollary(5, 3, 40.0, plan);
    const CorollaryReport ba = verify_corollary(3, 5, 40.0, plan);
    REQUIRE(ab.difference == -ba.difference); // bit-exact by construction
    REQUIRE(ab.forward == ba.reverse);

    // (3,5): D(3,5) = 0 (empty sum), so the report is -D(5,3) and bounded
    REQUIRE(ba.forward == 0.0);
    REQUIRE(std::abs(ba.normalized_difference) <=
            1.5 * calibration::corollary_normalized_difference);

    const CorollaryReport t40 = verify_corollary(5, 3, 40.0, plan);
    const CorollaryReport t160 = verify_corollary(5, 3, 160.0, plan);
    REQUIRE(std::abs(t160.difference) <= std::abs(t40.difference));
}
