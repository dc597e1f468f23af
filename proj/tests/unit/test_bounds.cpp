#include <aoisched/bounds.hpp>
#include <aoisched/error.hpp>

#include <doctest.h>

#include <cmath>

using namespace aoisched;

namespace {

const double kE = std::exp(1.0);

} // namespace

TEST_CASE("competitive ratio bound") {
    const auto b = cr_bound(1, 1);
    CHECK(b.finite_ratio == doctest::Approx(4.0));
    CHECK(b.asymptotic_ratio == doctest::Approx(kE / (kE - 1.0)));

    const auto big = cr_bound(1e6, 1e6);
    CHECK(std::abs(big.finite_ratio - big.asymptotic_ratio) / big.asymptotic_ratio < 1e-4);
    const auto r3 = cr_bound(1e6, 3e6);
    CHECK(std::abs(r3.finite_ratio - r3.asymptotic_ratio) / r3.asymptotic_ratio < 1e-4);
    CHECK(r3.asymptotic_ratio == doctest::Approx(std::exp(1.0 / 3) / (std::exp(1.0 / 3) - 1.0)));

    CHECK_THROWS_AS(cr_bound(2, 1), Error);
    CHECK_THROWS_AS(cr_bound(0, 1), Error);
}

TEST_CASE("exp_ratio stays accurate for small arguments") {
    for (double x : {1e-12, 1e-6, 0.01, 1.0, 5.0}) {
        // 1/(1 - e^-x) = 1/x + 1/2 + x/12 - ... near 0.
        const double series = 1.0 / x + 0.5 + x / 12.0;
        if (x < 0.02) CHECK(exp_ratio(x) == doctest::Approx(series).epsilon(1e-6));
        CHECK(exp_ratio(x) == doctest::Approx(std::exp(x) / (std::exp(x) - 1.0)).epsilon(1e-3));
    }
}

TEST_CASE("learning-augmented bounds") {
    for (double cm : {1.0, 3.0, 10.0})
        for (double r : {1.0, 2.0, 5.0}) {
            const auto ml = ml_bounds(cm, cm * r, 1.0);
            const auto cr = cr_bound(cm, cm * r);
            CHECK(ml.robustness.finite_ratio == doctest::Approx(cr.finite_ratio));
            CHECK(ml.robustness.asymptotic_ratio == doctest::Approx(cr.asymptotic_ratio));
        }
    const auto tiny = ml_bounds(1, 2, 1e-6);
    CHECK(std::abs(tiny.consistency.asymptotic_ratio - 2.0) < 1e-4);

    // λ = 0.5, C_m = 1, C_M = 2: θ_f = √1.5 − 1, θ_s = 1.25.
    const auto half = ml_bounds(1, 2, 0.5);
    const double theta_f = std::sqrt(1.5) - 1.0;
    CHECK(half.robustness.finite_ratio == doctest::Approx(2.0 * (1.0 + 1.0 / theta_f)));
    CHECK(half.consistency.finite_ratio ==
          doctest::Approx(std::max(1.0 + 1.0 / 1.25, 1.0 * (1.0 + 1.0 / theta_f))));

    try {
        ml_bounds(1, 2, 0.0);
        FAIL("accepted lambda 0");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LambdaOutOfRange);
    }
}

TEST_CASE("intermittent bound") {
    const auto b = intermittent_bound(4, 4, 1, 1);
    CHECK(b.finite_ratio == doctest::Approx(3.0517578125 * (1.0 + 1.0 / 1.44140625) + 1.0));
    CHECK(b.finite_ratio == doctest::Approx(6.16897).epsilon(1e-5));
    CHECK(b.asymptotic_ratio == intermittent_bound(4, 4, 1, 0).asymptotic_ratio);
    // No OFF slots: the basic bound.
    CHECK(intermittent_bound(4, 4, 1, 0).finite_ratio == doctest::Approx(cr_bound(4, 4).finite_ratio));
    CHECK(intermittent_bound(3, 6, 0, 5).finite_ratio == doctest::Approx(cr_bound(3, 6).finite_ratio));
    CHECK_THROWS_AS(intermittent_bound(1, 1, -1, 0), Error);
}

TEST_CASE("revised bound") {
    CHECK(revised_bound(1, 1).finite_ratio == doctest::Approx(4.0));
    CHECK(revised_bound(1, 2).asymptotic_ratio == doctest::Approx(2.0 * kE / (kE - 1.0)));
    CHECK(revised_bound(1, 2).asymptotic_ratio == doctest::Approx(3.1640).epsilon(1e-4));
    for (double cm : {1.0, 4.0, 50.0})
        for (int k = 0; k <= 90; ++k) {
            const double r = 1.0 + 0.1 * k;
            CHECK(revised_bound(cm, cm * r).asymptotic_ratio >=
                  cr_bound(cm, cm * r).asymptotic_ratio * (1 - 1e-12));
        }
}

TEST_CASE("adaptive pre-constant") {
    CHECK(adaptive_preconstant(1, 5, 2) == 1.0);
    CHECK(adaptive_preconstant(2, 1, 2) == 1.5);
    CHECK(adaptive_preconstant(3, 0, 7) == 1.0);
    CHECK_THROWS_AS(adaptive_preconstant(0, 1, 1), Error);
}

TEST_CASE("bounds move in the expected direction") {
    int points = 0;
    for (double cm = 1; cm <= 10; cm += 1)
        for (double r = 1; r <= 10; r += 1) {
            const double cM = cm * r;
            // Wider cost range: larger ratio.
            CHECK(cr_bound(cm, cM + 1).finite_ratio >= cr_bound(cm, cM).finite_ratio);
            CHECK(cr_bound(cm, cM).asymptotic_ratio >= cr_bound(cm, cm).asymptotic_ratio);
            // Robustness worsens as λ shrinks.
            double prev = INFINITY;
            for (int k = 1; k <= 10; ++k) {
                const double rob = ml_bounds(cm, cM, k / 10.0).robustness.finite_ratio;
                CHECK(rob <= prev);
                prev = rob;
                ++points;
            }
            CHECK(intermittent_bound(cm, cM, 2, 2).finite_ratio >= intermittent_bound(cm, cM, 2, 1).finite_ratio);
            CHECK(intermittent_bound(cm, cM, 3, 1).finite_ratio >= intermittent_bound(cm, cM, 1, 1).finite_ratio);
        }
    CHECK(points == 1000);
}
