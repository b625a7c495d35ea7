#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "zrec/fourier.hpp"
#include "zrec/quadrature.hpp"
#include "zrec/summation.hpp"

using namespace zrec;
using std::numbers::pi;

TEST_CASE("compensated_sum preserves tiny residues and long runs") {
    const std::vector<double> tiny{1.0, -1.0, 1e-16};
    REQUIRE(compensated_sum(tiny) == 1e-16);

    std::vector<double> tenth(1'000'000, 0.1);
    REQUIRE(std::abs(compensated_sum(tenth) - 100000.0) < 1e-9);
}

TEST_CASE("integrate_panels reference integrands") {
    QuadraturePlan plan;

    const Integral one = integrate_panels([](double) { return 1.0; }, 0.0, 1.0, plan);
    REQUIRE(std::abs(one.real() - 1.0) < 1e-14);

    const Integral osc = integrate_panels([](double t) { return std::cos(50.0 * t); }, 0.0,
                                          2.0 * pi, plan, [](double) { return 50.0; });
    REQUIRE(std::abs(osc.real()) < 1e-10);

    const Integral gauss =
        integrate_panels([](double t) { return std::exp(-t * t); }, -8.0, 8.0, plan);
    REQUIRE(std::abs(gauss.real() - std::sqrt(pi)) < 1e-12);
}

TEST_CASE("integrate_panels reports a usable error estimate") {
    QuadraturePlan coarse;
    coarse.panel_width = 4.0;
    QuadraturePlan fine = coarse;
    fine.panel_width = 2.0;

    auto integrands = std::vector<std::pair<std::function<double(double)>, double>>{
        {[](double t) { return std::cos(7.0 * t) * std::exp(-0.1 * t * t); }, 7.0},
        {[](double t) { return std::exp(-t * t) * (1.0 + t); }, 0.0},
        {[](double t) { return 1.0 / (1.0 + t * t); }, 1.0},
    };
    for (const auto& [f, fr] : integrands) {
        auto freq = [fr](double) { return fr; };
        const Integral a = integrate_panels(f, -6.0, 6.0, coarse, freq);
        const Integral b = integrate_panels(f, -6.0, 6.0, fine, freq);
        // halving panel_width moves the result by no more than the estimate
        REQUIRE(std::abs(a.value - b.value) <= a.error_estimate + 1e-15);
    }
}

TEST_CASE("integrate_panels precondition and tolerance diagnostics") {
    QuadraturePlan plan;
    REQUIRE_THROWS_AS(integrate_panels([](double) { return 1.0; }, 1.0, 0.0, plan),
                      std::invalid_argument);

    QuadraturePlan strict;
    strict.target_abs_tol = 1e-18;
    const Integral r = integrate_panels([](double t) { return std::sin(40.0 * t) / (2.0 + t); },
                                        0.0, 10.0, strict);
    REQUIRE_FALSE(r.within_tolerance);
}

TEST_CASE("quadrature plan validation") {
    QuadraturePlan bad;
    bad.lhs_cutoff_factor = 3.0;
    REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = QuadraturePlan{};
    bad.dual_cutoff = 10.0;
    REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = QuadraturePlan{};
    bad.target_abs_tol = 0.0;
    REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = QuadraturePlan{};
    bad.nodes_per_panel = 0;
    REQUIRE_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("gaussian window transform closed forms") {
    REQUIRE(std::abs(gaussian_window_transform(0.0, 10.0) - 10.0) < 1e-14);
    const double T = 25.0;
    REQUIRE(std::abs(gaussian_window_transform(2.0 / T, T) - T * std::exp(-1.0)) < 1e-12);

    // weighted transform: odd in xi, zero at the origin, sign opposite to xi
    REQUIRE(gaussian_window_transform_weighted(0.0, 40.0) == 0.0);
    REQUIRE(gaussian_window_transform_weighted(0.1, 40.0) < 0.0);
    REQUIRE(gaussian_window_transform_weighted(-0.1, 40.0) > 0.0);

    REQUIRE_THROWS_AS(gaussian_window_transform(0.0, 0.0), std::domain_error);
    REQUIRE_THROWS_AS(gaussian_window_transform_weighted(0.0, -1.0), std::domain_error);
}

TEST_CASE("gaussian window transforms match their defining integrals") {
    const Integral a = gaussian_window_transform_quadrature(0.3, 25.0);
    REQUIRE(std::abs(a.real() - gaussian_window_transform(0.3, 25.0)) < 1e-12);

    const Integral b = gaussian_window_transform_weighted_quadrature(0.1, 40.0);
    REQUIRE(std::abs(b.real() - gaussian_window_transform_weighted(0.1, 40.0)) < 1e-10);

    for (double T : {5.0, 25.0, 100.0})
        for (double xi = -1.0; xi <= 1.0001; xi += 0.5) {
            REQUIRE(std::abs(gaussian_window_transform_quadrature(xi, T).real() -
                             gaussian_window_transform(xi, T)) < 1e-10);
            REQUIRE(std::abs(gaussian_window_transform_weighted_quadrature(xi, T).real() -
                             gaussian_window_transform_weighted(xi, T)) < 1e-10);
        }
}
