#pragma once

namespace zlab {

/// Accuracy and truncation knobs shared by every evaluator.
struct EvalConfig {
    /// Target absolute error of theta (radians).
    double phase_precision = 1e-8;
    /// Number of correction terms kept in the asymptotic series of theta.
    int series_terms = 6;
    /// Largest abscissa the configuration certifies.
    double max_t = 1e7;
    /// Riemann-Siegel correction terms C0..C4 added after the main sum by
    /// riemann_siegel_z().  0 keeps the bare main sum.
    int rs_correction_terms = 0;
};

/// Throws ConfigInvalid if a field is out of its supported range.
void validate(const EvalConfig& cfg);

/// theta(t) and its first two derivatives.  theta is returned unreduced in
/// long double; reduce with phase::reduce() before taking sin/cos.
struct ThetaValue {
    double t = 0.0;
    long double theta = 0.0L;
    double dtheta = 0.0;
    double d2theta = 0.0;
};

/// Riemann-Siegel theta, -t/2 ln pi + Im ln Gamma(1/4 + it/2), from its
/// asymptotic expansion in 1/t.  Requires 10 <= t <= cfg.max_t.
ThetaValue theta(double t, const EvalConfig& cfg = {});

/// Leading three terms t/2 ln(t/2pi) - t/2 - pi/8; for initial guesses.
double theta_main(double t) noexcept;

/// Magnitude of the k-th coefficient of the 1/t expansion of theta
/// (k >= 1): (1 - 2^{1-2k}) |B_2k| / (4k(2k-1)).
long double theta_series_coefficient(int k);

inline constexpr int kMaxThetaSeriesTerms = 14;

}  // namespace zlab
