#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "reference_values.hpp"
#include "support.hpp"
#include "zlab/zeval.hpp"

using zlab::Errc;

TEST_CASE("oracle zeta at fixed points") {
    const auto half = zlab::zeta_oracle(0.5, 0.0);
    CHECK(half.real() == doctest::Approx(-1.4603545088095868).epsilon(1e-13));
    const auto one_i = zlab::zeta_oracle(1.0, 1.0);
    CHECK(one_i.real() == doctest::Approx(0.5821580597520036).epsilon(1e-13));
    CHECK(one_i.imag() == doctest::Approx(-0.9268485643308071).epsilon(1e-13));
    CHECK(testing::thrown([] { zlab::zeta_oracle(1.0, 0.0); }) == Errc::RangeViolation);
    CHECK(testing::thrown([] { zlab::zeta_oracle(1.5, 3.0); }) == Errc::RangeViolation);
}

TEST_CASE("oracle Z matches high-precision values") {
    for (const auto& row : ref::kZ) {
        CAPTURE(row.t);
        CHECK(std::fabs(zlab::z_oracle(row.t) - row.z) <= 1e-10);
        CHECK(std::fabs(zlab::rotated_zeta_oracle(row.t).imag()) <= 1e-9);
    }
}

TEST_CASE("batched oracle equals the pointwise oracle") {
    const std::vector<double> ts{100.0, 345.5, 1000.0, 2222.2};
    const auto batch = zlab::z_oracle(ts);
    for (std::size_t i = 0; i < ts.size(); ++i) CHECK(batch[i] == doctest::Approx(zlab::z_oracle(ts[i])).epsilon(1e-12));
}

TEST_CASE("oracle Z vanishes at the zeta zeros") {
    for (double g : ref::kZetaZeros) {
        CHECK(std::fabs(zlab::z_oracle(g)) <= 1e-9);
        CHECK(zlab::z_oracle(g - 0.01) * zlab::z_oracle(g + 0.01) < 0.0);
    }
}

TEST_CASE("main sum error is O(t^{-1/4}) and corrections shrink it") {
    zlab::EvalConfig rs;
    rs.rs_correction_terms = 5;
    for (const auto& row : ref::kZ) {
        CAPTURE(row.t);
        CHECK(std::fabs(zlab::z_main_sum(row.t) - row.z) <= 2.0 * std::pow(row.t, -0.25));
        CHECK(std::fabs(zlab::riemann_siegel_z(row.t, rs) - row.z) <= 1e-6);
    }
}

TEST_CASE("correction C0 against its closed form") {
    for (double p : {0.1, 0.3, 0.7, 0.95}) {
        const double closed = std::cos(2.0 * M_PI * (p * p - p - 1.0 / 16.0)) / std::cos(2.0 * M_PI * p);
        CHECK(zlab::rs_correction(0, p) == doctest::Approx(closed).epsilon(1e-14));
    }
    CHECK(testing::thrown([] { zlab::rs_correction(5, 0.5); }) == Errc::RangeViolation);
}

TEST_CASE("finite-difference derivative matches high-precision values") {
    for (const auto& row : ref::kZPrime) {
        CAPTURE(row.t);
        CHECK(std::fabs(zlab::zprime_fd_oracle(row.t) - row.zprime) <= 1e-6);
    }
    CHECK(testing::thrown([] { zlab::zprime_fd_oracle(1000.0, 1e-7); }) == Errc::StepTooSmall);
    CHECK(testing::thrown([] { zlab::zprime_fd_oracle(1000.0, 0.1); }) == Errc::RangeViolation);
}

TEST_CASE("formula-1 derivative within its error shape") {
    for (const auto& row : ref::kZPrime) {
        const double err = std::fabs(zlab::zprime_formula1(row.t) - row.zprime);
        CHECK(err <= 10.0 * std::pow(row.t, -0.25) * std::log(row.t));
    }
}

TEST_CASE("main sum length") {
    for (int n : {3, 10, 40}) {
        const double edge = 2.0 * M_PI * n * n;
        CHECK(zlab::main_sum_terms(edge * (1.0 + 1e-12)) == n);
        CHECK(zlab::main_sum_terms(edge * (1.0 - 1e-9)) == n - 1);
    }
    CHECK(testing::thrown([] { zlab::z_main_sum(49.0); }) == Errc::DomainTooSmall);
}

TEST_CASE("window admissibility") {
    CHECK(testing::thrown([] { zlab::make_window(1e4, 10.5); }) == Errc::WindowTooLong);
    CHECK(testing::thrown([] { zlab::make_window(1e4, -1.0); }) == Errc::RangeViolation);
    CHECK(testing::thrown([] { zlab::make_window(40.0, 1.0); }) == Errc::RangeViolation);
    const zlab::Window w = zlab::make_window(1e4, 10.0);
    CHECK(w.P0 == doctest::Approx(std::sqrt(1e4 / (2.0 * M_PI))));
    CHECK(testing::thrown([&] { zlab::zprime_formula2(1e4 + 10.5, w); }) == Errc::OutOfWindow);
    const zlab::Window point = zlab::make_window(1e4, 0.0);
    CHECK(std::isfinite(zlab::zprime_formula2(1e4, point)));
}

TEST_CASE("formula-2 stays within the reduction budget of formula 1") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(std::log(1e4), std::log(1e6));
    for (int i = 0; i < 20; ++i) {
        const double T = std::exp(u(rng));
        const zlab::Window w = zlab::make_window(T, std::pow(T, 0.25));
        for (double f : {0.0, 0.37, 1.0}) {
            const double t = T + f * w.H;
            CHECK(std::fabs(zlab::zprime_formula2(t, w) - zlab::zprime_formula1(t)) <=
                  10.0 * std::pow(T, -0.25) * std::log(T));
        }
    }
}

TEST_CASE("tiles cover a span with admissible contiguous windows") {
    const zlab::Span span{5e4, 300.0};
    const auto tiles = zlab::tile(span);
    REQUIRE(!tiles.empty());
    CHECK(tiles.front().T == span.T);
    CHECK(tiles.back().end() == doctest::Approx(span.end()).epsilon(1e-15));
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        CHECK(tiles[i].H <= std::pow(tiles[i].T, 0.25));
        if (i > 0) CHECK(tiles[i].T == tiles[i - 1].end());
    }
    const zlab::TiledDerivative f(span);
    for (double t : {5e4, 5e4 + 123.4, 5e4 + 300.0}) {
        CHECK(f(t) == zlab::zprime_formula2(t, f.window_for(t)));
    }
    CHECK(testing::thrown([&] { f(5e4 - 1.0); }) == Errc::OutOfWindow);
    CHECK(zlab::tile(zlab::Span{1e4, 0.0}).size() == 1);
}

TEST_CASE("evaluate bundles the three quantities") {
    const zlab::Window w = zlab::make_window(2e4, 5.0);
    const zlab::ZPoint p = zlab::evaluate(2e4 + 1.0, w);
    CHECK(p.z == zlab::z_main_sum(2e4 + 1.0));
    CHECK(p.zprime_f1 == zlab::zprime_formula1(2e4 + 1.0));
    CHECK(p.zprime_f2 == zlab::zprime_formula2(2e4 + 1.0, w));
    CHECK(p.terms_used == zlab::main_sum_terms(2e4 + 1.0));
}
