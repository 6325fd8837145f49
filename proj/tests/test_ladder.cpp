#include <doctest.h>

#include <cmath>

#include "reference_values.hpp"
#include "support.hpp"
#include "zlab/ladder.hpp"
#include "zlab/zeval.hpp"

using zlab::Errc;

TEST_CASE("Z^2 matches |zeta|^2 on both sides of the oracle threshold") {
    for (double t : {0.0, 3.7, 14.1, 500.0, 1500.0, 5000.0, 123456.0}) {
        const double z = std::abs(zlab::zeta_oracle(0.5, t));
        CAPTURE(t);
        CHECK(zlab::z_squared(t) == doctest::Approx(z * z).epsilon(1e-9));
    }
    CHECK(testing::thrown([] { zlab::z_squared(-1.0); }) == Errc::RangeViolation);
}

TEST_CASE("integral of Z^2 matches high-precision quadrature") {
    for (const auto& row : ref::kZSquaredIntegral) {
        CAPTURE(row.T);
        CHECK(zlab::z_squared_integral(row.T) == doctest::Approx(row.value).epsilon(1e-10));
    }
    CHECK(testing::thrown([] { zlab::z_squared_integral(5.0); }) == Errc::DomainTooSmall);
}

TEST_CASE("halving the panels leaves the integral unchanged") {
    const zlab::QuadratureCheck c = zlab::check_quadrature(3000.0);
    CHECK(c.relative_change <= 1e-10);
    zlab::QuadratureOptions bad;
    bad.nodes = 1;
    CHECK(testing::thrown([&] { zlab::z_squared_integral(100.0, bad); }) == Errc::ConfigInvalid);
}

TEST_CASE("weighted integral with a huge scale approaches the plain integral") {
    const double plain = zlab::z_squared_integral(400.0);
    const double weighted = zlab::weighted_z_squared_integral(1e9, 400.0);
    CHECK(weighted == doctest::Approx(plain).epsilon(1e-6));
    CHECK(zlab::weighted_z_squared_integral(100.0, 0.0) == 0.0);
}

TEST_CASE("remainder Q(T) stays within C T^{1/4}") {
    for (double T : {100.0, 300.0, 1000.0, 2500.0}) {
        CHECK(std::fabs(zlab::hardy_littlewood_Q(T)) <= 20.0 * std::pow(T, 0.25));
    }
    CHECK(testing::thrown([] { zlab::hardy_littlewood_Q(50.0); }) == Errc::DomainTooSmall);
}

TEST_CASE("integral equation at the anchor") {
    const zlab::LadderSolution s7 = zlab::solve_phi(1e3, 7.0);
    const zlab::LadderSolution s9 = zlab::solve_phi(1e3, 9.0);
    CHECK(s7.defect <= 1e-6);
    CHECK(s9.defect <= 1e-6);
    CHECK(s7.x == doctest::Approx(1867.6210173448212).epsilon(1e-9));
    CHECK(s7.phi1 == s7.x / 2.0);
    CHECK(s7.rhs == zlab::z_squared_integral(1e3));
    const double lhs7 = zlab::weighted_z_squared_integral(s7.x, s7.upper);
    CHECK(std::fabs(lhs7 - s7.rhs) <= 1e-6 * s7.rhs);
    const double lhs9 = zlab::weighted_z_squared_integral(s9.x, s9.upper);
    CHECK(std::fabs(lhs9 - s9.rhs) <= 1e-6 * s9.rhs);
    CHECK(s7.upper <= zlab::ladder_mu(s7.x, 7.0));
    CHECK(testing::thrown([] { zlab::solve_phi(1e3, 6.5); }) == Errc::RangeViolation);
    CHECK(testing::thrown([] { zlab::solve_phi(50.0, 7.0); }) == Errc::DomainTooSmall);
}

TEST_CASE("a right side at or below the floor returns the lower edge") {
    const zlab::LadderSolution s = zlab::solve_integral_equation(0.0, 7.0);
    CHECK(s.x == 2.0);
    CHECK(testing::thrown([] { zlab::solve_integral_equation(-1.0, 7.0); }) == Errc::RangeViolation);
}

TEST_CASE("representation residual after calibration") {
    const double c0 = zlab::calibrate_c0(1e3, 7.0);
    CHECK(representation_residual(zlab::solve_phi(1e3, 7.0), c0) == 0.0);
    const std::vector<double> Ts{1e3, 1414.0, 2e3};
    const auto rows = zlab::ladder_scan(Ts, 7.0, c0);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].defect <= 1e-6);
        CHECK(std::fabs(rows[i].Q1) < std::fabs(rows[i].Q));
        CHECK(rows[i].Q == doctest::Approx(zlab::hardy_littlewood_Q(rows[i].T)));
        if (i > 0) CHECK(rows[i].x > rows[i - 1].x);
    }
}

TEST_CASE("main part of the representation") {
    const double y = 500.0;
    CHECK(zlab::ladder_main(y) == doctest::Approx(y * std::log(y) + (0.5772156649015329 - std::log(2.0 * M_PI)) * y));
    CHECK(zlab::ladder_mu(100.0, 7.0) == doctest::Approx(700.0 * std::log(100.0)));
}
