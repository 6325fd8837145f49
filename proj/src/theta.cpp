#include "zlab/theta.hpp"

#include <array>
#include <cmath>
#include <string>

#include "zlab/errors.hpp"
#include "zlab/phase.hpp"

namespace zlab {

namespace {

// |B_2k| for k = 1..15.
constexpr std::array<long double, 15> kBernoulliAbs = {
    1.0L / 6.0L,
    1.0L / 30.0L,
    1.0L / 42.0L,
    1.0L / 30.0L,
    5.0L / 66.0L,
    691.0L / 2730.0L,
    7.0L / 6.0L,
    3617.0L / 510.0L,
    43867.0L / 798.0L,
    174611.0L / 330.0L,
    854513.0L / 138.0L,
    236364091.0L / 2730.0L,
    8553103.0L / 6.0L,
    23749461029.0L / 870.0L,
    8615841276005.0L / 14322.0L,
};

}  // namespace

long double theta_series_coefficient(int k) {
    if (k < 1 || k > static_cast<int>(kBernoulliAbs.size())) {
        fail(Errc::RangeViolation, "theta series index " + std::to_string(k));
    }
    const long double kk = k;
    return (1.0L - std::ldexp(1.0L, 1 - 2 * k)) * kBernoulliAbs[k - 1] / (4.0L * kk * (2.0L * kk - 1.0L));
}

void validate(const EvalConfig& cfg) {
    if (!(cfg.phase_precision > 0.0)) fail(Errc::ConfigInvalid, "phase_precision must be positive");
    if (cfg.series_terms < 0 || cfg.series_terms > kMaxThetaSeriesTerms) {
        fail(Errc::ConfigInvalid, "series_terms must lie in [0, 14]");
    }
    if (!(cfg.max_t >= 10.0)) fail(Errc::ConfigInvalid, "max_t must be at least 10");
    if (cfg.rs_correction_terms < 0 || cfg.rs_correction_terms > 5) {
        fail(Errc::ConfigInvalid, "rs_correction_terms must lie in [0, 5]");
    }
}

ThetaValue theta(double t, const EvalConfig& cfg) {
    if (!(t >= 10.0)) fail(Errc::DomainTooSmall, "theta requires t >= 10, got " + std::to_string(t));
    if (t > cfg.max_t) fail(Errc::DomainExceeded, "t = " + std::to_string(t) + " exceeds max_t");
    validate(cfg);

    const int terms = cfg.series_terms;
    const long double tl = t;
    const long double inv = 1.0L / tl;
    const long double first_omitted = theta_series_coefficient(terms + 1) * std::pow(inv, 2 * terms + 1);
    if (first_omitted > cfg.phase_precision) {
        fail(Errc::PrecisionUnreachable,
             "series order " + std::to_string(terms) + " cannot reach the requested phase precision at t = " +
                 std::to_string(t));
    }

    const long double log_ratio = std::log(tl) - phase::kLnTwoPi;
    long double value = 0.5L * tl * log_ratio - 0.5L * tl - phase::kPi / 8.0L;
    long double d1 = 0.5L * log_ratio;
    long double d2 = 0.5L * inv;

    // c_k t^{1-2k}, its derivative -(2k-1) c_k t^{-2k}, and (2k-1)(2k) c_k t^{-2k-1}.
    const long double inv2 = inv * inv;
    long double power = inv;  // t^{1-2k}
    for (int k = 1; k <= terms; ++k) {
        const long double c = theta_series_coefficient(k);
        const long double m = 2.0L * k - 1.0L;
        value += c * power;
        d1 -= m * c * power * inv;
        d2 += m * (m + 1.0L) * c * power * inv2;
        power *= inv2;
    }

    return ThetaValue{t, value, static_cast<double>(d1), static_cast<double>(d2)};
}

double theta_main(double t) noexcept {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    constexpr double kPi = 3.141592653589793238462643383279;
    return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8.0;
}

}  // namespace zlab
