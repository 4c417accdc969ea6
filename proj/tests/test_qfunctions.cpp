#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "superq/errors.hpp"
#include "superq/qfunctions.hpp"

using namespace superq;
using namespace superq::qfunc;

constexpr double kInvPi = std::numbers::inv_pi;

TEST_CASE("coherent Q") {
    CHECK(q_coherent({0, 0}, ScaledParams::make(0, 0)) == doctest::Approx(kInvPi).epsilon(1e-15));
    CHECK(q_coherent({0.6, 0}, ScaledParams::make(0.6, 0.3)) == doctest::Approx(kInvPi).epsilon(1e-15));
    // exp(-0.36)/pi, cross-checked against the Husimi value of a Lindblad coherent steady state
    CHECK(q_coherent({0, 0}, ScaledParams::make(0.6, 0)) == doctest::Approx(0.222077271944795).epsilon(1e-13));
}

TEST_CASE("squeezed Q") {
    CHECK(q_squeezed({0, 0}, ScaledParams::make(0, 0)) == doctest::Approx(kInvPi).epsilon(1e-15));
    CHECK(q_squeezed({0, 0}, ScaledParams::make(0, 0.4)) == doctest::Approx(0.297751634230688).epsilon(1e-13));
    // v < 0: narrower along the real axis
    const auto p = ScaledParams::make(0, 0.4);
    CHECK(q_squeezed({1.0, 0}, p) < q_squeezed({0, 1.0}, p));
    // covariance route
    for (double x : {-1.0, 0.2, 1.3})
        for (double y : {-0.8, 0.0, 0.9})
            CHECK(q_squeezed({x, y}, p) == doctest::Approx(oracle::q_displaced_squeezed({x, y}, 0, 0.4)).epsilon(1e-12));
}

TEST_CASE("superposed Q") {
    const auto p = ScaledParams::make(0.6, 0.4);
    // 4D brute-force quadrature of the superposition integral in numpy: 0.195636764366
    CHECK(q_superposed({0, 0}, p) == doctest::Approx(0.195636764366).epsilon(1e-10));
    CHECK(q_superposed({0.5, 0.2}, p) == doctest::Approx(0.285600228391).epsilon(1e-10));
    for (double x : {-1.0, 0.2, 1.3})
        for (double y : {-0.8, 0.0, 0.9})
            CHECK(q_superposed({x, y}, p) == doctest::Approx(oracle::q_displaced_squeezed({x, y}, 0.6, 0.4)).epsilon(1e-12));
}

TEST_CASE("reductions hold pointwise") {
    oracle::Gen gen(3);
    for (int i = 0; i < 300; ++i) {
        const PhasePoint pt{gen.uniform(-3, 3), gen.uniform(-3, 3)};
        const double a = gen.uniform(0, 2);
        const double b = gen.uniform(0, 0.99);
        REQUIRE(q_superposed(pt, ScaledParams::make(a, 0)) == doctest::Approx(q_coherent(pt, ScaledParams::make(a, 0))).epsilon(1e-14));
        REQUIRE(q_superposed(pt, ScaledParams::make(0, b)) == doctest::Approx(q_squeezed(pt, ScaledParams::make(0, b))).epsilon(1e-14));
        REQUIRE(q_superposed(pt, ScaledParams::make(a, b)) > 0.0);
    }
}

TEST_CASE("characteristic functions") {
    const auto p = ScaledParams::make(0.6, 0.4);
    CHECK(char_fn_antinormal({0, 0}, p, Kind::coherent) == std::complex<double>(1.0));
    CHECK(char_fn_antinormal({0, 0}, p, Kind::squeezed) == std::complex<double>(1.0));
    CHECK(std::abs(char_fn_antinormal({1, 0}, p, Kind::coherent) - std::exp(-1.0)) < 1e-15);
    // exp(-a1/4 + a2/4) = exp(-1/3) at b = 0.4; a scipy expm evaluation gives 0.716531310574
    CHECK(std::abs(char_fn_antinormal({0.5, 0}, p, Kind::squeezed) - 0.716531310573789) < 1e-12);
    // imaginary z picks up the linear phase of the coherent drive
    const auto phi = char_fn_antinormal({0, 0.5}, p, Kind::coherent);
    CHECK(std::abs(phi - std::exp(-0.25) * std::exp(std::complex<double>(0, 0.6))) < 1e-15);
    CHECK_THROWS_AS(char_fn_antinormal({0, 0}, p, Kind::superposed), DomainError);
}

TEST_CASE("Q from the characteristic-function transform") {
    const auto vac = ScaledParams::make(0, 0);
    CHECK(q_from_char_fn({0, 0}, vac, Kind::coherent) == doctest::Approx(kInvPi).epsilon(1e-10));
    const auto p = ScaledParams::make(0.6, 0.4);
    CHECK(q_from_char_fn({0, 0}, p, Kind::squeezed) == doctest::Approx(0.297751634230688).epsilon(1e-9));
    CHECK(q_from_char_fn({0.6, 0}, p, Kind::coherent) == doctest::Approx(kInvPi).epsilon(1e-9));
    CHECK(std::abs(q_from_char_fn({0.3, -0.7}, p, Kind::squeezed) - q_squeezed({0.3, -0.7}, p)) < 1e-10);
    SUBCASE("too small a box is reported") {
        CHECK_THROWS_AS(q_from_char_fn({0, 0}, p, Kind::squeezed, {2.0, 64, 1e-12}), QuadratureError);
    }
}

TEST_CASE("superposition integral by 4D quadrature") {
    CHECK(superpose_q_numeric({0, 0}, ScaledParams::make(0, 0)) == doctest::Approx(kInvPi).epsilon(1e-9));
    const auto p = ScaledParams::make(0.6, 0.4);
    const double coarse = superpose_q_numeric({0.5, 0.2}, p, {8.0, 40, 1e-12});
    CHECK(coarse == doctest::Approx(q_superposed({0.5, 0.2}, p)).epsilon(1e-3));
    // grid refinement keeps the value
    const double fine = superpose_q_numeric({0.5, 0.2}, p, {8.0, 56, 1e-12});
    CHECK(std::abs(fine - coarse) < 1e-9);
    CHECK_THROWS_AS(superpose_q_numeric({0, 0}, p, {2.5, 24, 1e-12}), QuadratureError);
    CHECK_THROWS_AS(superpose_q_numeric({0, 0}, p, {8.0, 2, 1e-12}), DomainError);
}

TEST_CASE("Q grids") {
    SUBCASE("vacuum") {
        const auto g = q_grid(Kind::coherent, ScaledParams::make(0, 0), 128, 6.0);
        CHECK(std::abs(g.normalization - 1.0) < 1e-6);
        CHECK_FALSE(g.warning);
        CHECK(g.values.size() == 128u * 128u);
        CHECK(g.coordinate(0) == -6.0);
        CHECK(g.coordinate(127) == doctest::Approx(6.0).epsilon(1e-14));
    }
    SUBCASE("superposed, auto extent") {
        const auto g = q_grid(Kind::superposed, ScaledParams::make(0.6, 0.4), 256);
        CHECK(std::abs(g.normalization - 1.0) < 1e-6);
        for (double v : g.values) REQUIRE(v >= 0.0);
        // row-major: i indexes Re, j indexes Im
        const int i = 100, j = 37;
        CHECK(g.values[i * 256 + j] == q_superposed({g.coordinate(i), g.coordinate(j)}, g.params));
    }
    SUBCASE("auto extent grows near threshold") {
        const double e40 = auto_extent(Kind::superposed, ScaledParams::make(0.6, 0.4));
        const double e99 = auto_extent(Kind::superposed, ScaledParams::make(0.6, 0.99));
        // sigma^2 = (2 + b/(1-b))/4 along the anti-squeezed axis
        CHECK(e99 == doctest::Approx(0.6 + 6.0 * std::sqrt((2.0 + 0.99 / 0.01) / 4.0)).epsilon(1e-12));
        CHECK(e99 > 4.0 * e40);
        const auto g = q_grid(Kind::superposed, ScaledParams::make(0.6, 0.99), 256);
        CHECK(std::abs(g.normalization - 1.0) < 1e-6);
    }
    SUBCASE("a box that is too small carries a warning") {
        const auto g = q_grid(Kind::squeezed, ScaledParams::make(0, 0.8), 64, 1.0);
        REQUIRE(g.warning);
        CHECK(g.normalization < 0.99);
    }
    CHECK_THROWS_AS(q_grid(Kind::coherent, ScaledParams::make(0, 0), 15), DomainError);
    CHECK_THROWS_AS(q_grid(Kind::coherent, ScaledParams::make(0, 0), 32, -1.0), DomainError);
}

TEST_CASE("kind names") {
    CHECK(parse_kind("squeezed") == Kind::squeezed);
    CHECK(std::string(to_string(Kind::superposed)) == "superposed");
    CHECK_THROWS_AS(parse_kind("wigner"), DomainError);
}
