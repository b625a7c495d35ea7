#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "zrec/calibration.hpp"
#include "zrec/proof_oracles.hpp"

using namespace zrec;

TEST_CASE("additive reciprocity identity") {
    REQUIRE(additive_reciprocity_check(1, 1, 3, 5) == 0.0);
    REQUIRE(additive_reciprocity_check(7, 11, 13, 17) < 1e-14);
    REQUIRE(additive_reciprocity_check(15, 7, 3, 5) == 0.0); // nm = 0 mod pq

    std::mt19937_64 rng(5150);
    const std::vector<long> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                   47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
    std::uniform_int_distribution<long> nm(1, 1'000'000);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    for (int i = 0; i < 10'000; ++i) {
        const long p = primes[pick(rng)];
        long q = p;
        while (q == p) q = primes[pick(rng)];
        REQUIRE(additive_reciprocity_check(nm(rng), nm(rng), p, q) < 1e-14);
    }
    REQUIRE_THROWS_AS(additive_reciprocity_check(1, 1, 5, 5), std::invalid_argument);
}

TEST_CASE("character split identity") {
    REQUIRE(character_split_check({3, 5, 20.0}, 500).difference < 1e-11);
    REQUIRE(character_split_check({5, 7, 20.0}, 2000).difference < 1e-10);
    REQUIRE(character_split_check({7, 3, 40.0}, 1500).difference < 1e-10);

    // deliberate fault: dropping the r -> r q^{-1} substitution breaks the
    // identity whenever an even non-principal character contributes
    const SplitCheck faulty =
        character_split_check({5, 3, 20.0}, 500, SplitFault::drop_inverse_substitution);
    REQUIRE(faulty.difference > 1e-3);
    REQUIRE(character_split_check({5, 3, 20.0}, 500).difference < 1e-11);
}

TEST_CASE("cosine-gaussian sum forms") {
    const ReciprocityInstance inst(5, 3, 20.0);
    const OracleValue cos_sum = f2_at_zero_cos_sum(inst);

    // the raw sum matches the split check's direct side at the same X
    const double scale = 5.0 * 20.0 / (2.0 * std::numbers::pi * 3.0);
    const long X = long(std::ceil(6.5 * scale)) + 8;
    const SplitCheck split = character_split_check(inst, X);
    const double prefactor = 4.0 * std::numbers::pi * std::sqrt(3.0 / 5.0);
    REQUIRE(std::abs(cos_sum.value - prefactor * split.direct) < 1e-10);

    // T -> 0+ kills every term of the raw sum
    REQUIRE(cosine_gaussian_sum_raw(5, 3, 1e-3, 200) == 0.0);
}

TEST_CASE("f2 forms agree") {
    const ReciprocityInstance inst(3, 5, 20.0);
    const OracleValue im_form = f2_at_zero_exact(inst);
    const OracleValue sine_form = f2_at_zero_exact(inst, {}, F2Form::sine);
    REQUIRE(std::abs(im_form.value - sine_form.value) < 1e-10);
}

TEST_CASE("series bounds and truncation stability") {
    QuadraturePlan doubled;
    doubled.sum_cutoff_multiplier = 16.0;
    for (auto [p, q] : {std::pair<long, long>{3, 5}, {5, 3}}) {
        const ReciprocityInstance inst(p, q, 20.0);
        const double sqrt_pq = std::sqrt(double(p) / double(q));

        const OracleValue f1 = f1_at_zero(inst);
        REQUIRE(std::abs(f1.value) <= 1.5 * calibration::f1_bound * sqrt_pq);
        REQUIRE(std::abs(f1_at_zero(inst, doubled).value - f1.value) < 1e-8);

        const OracleValue f3 = f3_at_zero(inst);
        REQUIRE(std::abs(f3.value) <= 1.5 * calibration::f3_bound * sqrt_pq);
        REQUIRE(std::abs(f3_at_zero(inst, doubled).value - f3.value) < 1e-8);
    }

    QuadraturePlan wide;
    wide.y_max = 12.0;
    const ReciprocityInstance inst(3, 5, 20.0);
    REQUIRE(std::abs(f2_at_zero_exact(inst, wide).value - f2_at_zero_exact(inst).value) < 1e-10);
}

TEST_CASE("pole correction and the F(0) split") {
    QuadraturePlan plan;
    const ReciprocityInstance inst(3, 5, 20.0);

    const Integral pole = pole_correction(inst, plan);
    REQUIRE(std::abs(pole.value.imag()) < 1e-9);
    REQUIRE(std::abs(pole.value) <= 1.5 * calibration::pole_correction_bound);

    // the t <-> -t pairing makes the value real for either orientation of
    // the twist (it does not make it swap-invariant: the zeta-times-pole
    // factor is not conjugated by swapping p and q)
    const Integral pole_swapped = pole_correction(inst.swapped(), plan);
    REQUIRE(std::abs(pole_swapped.value.imag()) < 1e-9);
    REQUIRE(std::abs(pole_swapped.value) <= 1.5 * calibration::pole_correction_bound);

    const Integral f0 = f_at_zero_direct(inst, plan);
    REQUIRE(std::abs(f0.value.imag()) < 1e-9);
    const double lhs = lhs_moment(inst, plan);
    REQUIRE(std::abs(f0.value - (std::complex<double>(lhs, 0.0) - pole.value)) < 1e-8);
}

TEST_CASE("decomposition ledger") {
    for (auto [p, q] : {std::pair<long, long>{3, 5}, {5, 3}}) {
        const ReciprocityInstance inst(p, q, 20.0);
        const IntermediateLedger led = decomposition_check(inst);
        REQUIRE(led.decomposition_residual <= 1e-6);
        REQUIRE(led.within_budget);
        REQUIRE(led.decomposition_residual ==
                std::abs(led.f0_direct -
                         std::complex<double>(led.f1_0 + led.f2_0_exact + led.f3_0, 0.0)));
        REQUIRE(led.approx_gap ==
                std::abs(led.f2_0_exact - led.f2_0_cos_sum));
        REQUIRE(led.approx_gap <=
                1.5 * calibration::taylor_approx_gap * std::sqrt(double(p) / double(q)));
    }
}

TEST_CASE("residue extraction of the main term") {
    const ResidueCheck a = residue_main_term_check({3, 5, 40.0});
    REQUIRE(a.diff < 1e-8);

    // contour independence: radius 1/8 vs 1/4
    const ResidueCheck b = residue_main_term_check({3, 5, 40.0}, {}, 0.125);
    REQUIRE(std::abs(a.contour - b.contour) < 1e-9);

    const ResidueCheck c = residue_main_term_check({7, 11, 80.0});
    REQUIRE(c.diff < 1e-8);
}

TEST_CASE("mellin pair residuals") {
    const MellinPairCheck check = mellin_pair_check();
    REQUIRE(check.max_residual < 1e-8);
    for (auto [s, r] : check.cosine_residuals) {
        (void)s;
        REQUIRE(r < 1e-8);
    }
    for (auto [w, r] : check.gaussian_residuals) {
        (void)w;
        REQUIRE(r < 1e-10);
    }
    // s = 0 closed form is sqrt(pi/2)
    const double target = std::sqrt(std::numbers::pi / 2.0);
    const double via_gamma = complex_gamma({0.5, 0.0}).real() * std::cos(std::numbers::pi / 4.0);
    REQUIRE(std::abs(via_gamma - target) < 1e-14);
}
