#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "superq/combined.hpp"
#include "superq/errors.hpp"
#include "superq/superposed.hpp"

using namespace superq;
using namespace superq::superposed;

TEST_CASE("superposed moments") {
    const auto vac = superposed_moments(ScaledParams::make(0, 0));
    CHECK(vac.mean_amp == 0.0);
    CHECK(vac.mean_sq == 0.0);
    CHECK(vac.mean_photon == 0.0);

    // coherent-only plus squeezed-only Lindblad moments (scipy, N = 60)
    const auto m = superposed_moments(scale({1.0, 0.3, 0.2}));
    CHECK(m.mean_amp == 0.6);
    CHECK(m.mean_photon == doctest::Approx(0.36 + 0.095238095238).epsilon(1e-11));
    CHECK(m.mean_sq == doctest::Approx(0.36 - 0.238095238095).epsilon(1e-11));
}

TEST_CASE("moments by quadrature over the superposed Q") {
    for (double a : {0.0, 0.6, 1.5}) {
        for (double b : {0.0, 0.4, 0.9}) {
            const auto p = ScaledParams::make(a, b);
            const auto closed = superposed_moments(p);
            const auto quad = superposed_moments_quadrature(p);
            CHECK(std::abs(quad.mean_amp - closed.mean_amp) < 1e-6);
            CHECK(std::abs(quad.mean_sq - closed.mean_sq) < 1e-6);
            CHECK(std::abs(quad.mean_photon - closed.mean_photon) < 1e-6);
        }
    }
}

TEST_CASE("pair-beam variances and squeezing") {
    const auto vac = quad_variance_pair(ScaledParams::make(0, 0));
    CHECK(vac.plus == 2.0);
    CHECK(vac.minus == 2.0);

    const auto v = quad_variance_pair(ScaledParams::make(0.6, 0.4));
    CHECK(v.plus == doctest::Approx(1.714285714286).epsilon(1e-11));
    CHECK(v.minus == doctest::Approx(2.666666666667).epsilon(1e-11));
    const auto shifted = quad_variance_pair(ScaledParams::make(2.0, 0.4));
    CHECK(shifted.plus == doctest::Approx(v.plus).epsilon(1e-13));
    CHECK(shifted.minus == doctest::Approx(v.minus).epsilon(1e-13));

    CHECK(quadrature_squeezing(ScaledParams::make(0.6, 0)) == 0.0);
    CHECK(quadrature_squeezing(ScaledParams::make(0.6, 0.4)) == doctest::Approx(0.142857142857).epsilon(1e-11));
    CHECK(quadrature_squeezing(ScaledParams::make(0.6, 0.99)) == doctest::Approx(0.248743718593).epsilon(1e-11));
    CHECK(quadrature_squeezing(ScaledParams::make(0.6, 0.99)) < 0.25);
}

TEST_CASE("output report") {
    SUBCASE("kappa = 1") {
        const auto r = output_report({1.0, 0.3, 0.2});
        CHECK(r.mean_photon_out == doctest::Approx(0.455238095238).epsilon(1e-11));
        CHECK(r.squeezing_out == doctest::Approx(0.142857142857).epsilon(1e-11));
    }
    SUBCASE("kappa = 2 keeps (a, b) and scales photon flux") {
        const auto r = output_report({2.0, 0.6, 0.4});
        CHECK(r.a == 0.6);
        CHECK(r.b == 0.4);
        CHECK(r.mean_photon_out == doctest::Approx(0.910476190476).epsilon(1e-11));
        CHECK(r.squeezing_out == doctest::Approx(0.142857142857).epsilon(1e-11));
        CHECK(r.var_plus_out == 2.0 * r.var_plus);
    }
    SUBCASE("vacuum") {
        const auto r = output_report({1.0, 0.0, 0.0});
        CHECK(r.mean_photon == 0.0);
        CHECK(r.mean_photon_out == 0.0);
        CHECK(r.var_plus == 2.0);
        CHECK(r.var_minus == 2.0);
        CHECK(r.squeezing == 0.0);
        CHECK(r.squeezing_out == 0.0);
    }
    CHECK_THROWS_AS(output_report({1.0, 0.1, 0.5}), StabilityError);
}

TEST_CASE("property: additivity, contrast, halving and output identities") {
    oracle::Gen gen(19);
    for (int i = 0; i < 1000; ++i) {
        const double kappa = gen.uniform(0.1, 10.0);
        const double a = gen.uniform(0.0, 3.0);
        const double b = gen.uniform(0.0, 0.99);
        const auto p = ScaledParams::make(a, b);
        const auto sum = combined::steady_moments(ScaledParams::make(a, 0)) + combined::steady_moments(ScaledParams::make(0, b));
        const auto sup = superposed_moments(p);
        REQUIRE(sup.mean_amp == doctest::Approx(sum.mean_amp).epsilon(1e-14));
        REQUIRE(sup.mean_sq == doctest::Approx(sum.mean_sq).epsilon(1e-12));
        REQUIRE(sup.mean_photon == doctest::Approx(sum.mean_photon).epsilon(1e-12));

        if (a > 1e-3 && b > 1e-3) {
            REQUIRE(sup.mean_photon > combined::steady_moments(p).mean_photon);
        }

        const double half = 0.5 * (1.0 - combined::quad_variance_single(p).plus);
        REQUIRE(std::abs(quadrature_squeezing(p) - half) <= 1e-12);
        REQUIRE(std::abs(quadrature_squeezing(p) - quadrature_squeezing_closed(p)) <= 1e-12);

        const auto var = quad_variance_pair(p);
        REQUIRE(var.plus * var.minus >= 4.0 - 1e-12);
        REQUIRE(var.plus * var.minus == doctest::Approx((4.0 - b * b) / (1.0 - b * b)).epsilon(1e-9));

        const auto r = output_report({kappa, 0.5 * a * kappa, 0.5 * b * kappa * 0.999999});
        REQUIRE(r.mean_photon_out == kappa * r.mean_photon);
        REQUIRE(r.squeezing_out == doctest::Approx(r.squeezing).epsilon(4e-16).scale(1.0));
    }
}
