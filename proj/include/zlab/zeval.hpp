#pragma once

#include <complex>
#include <span>
#include <vector>

#include "zlab/theta.hpp"

namespace zlab {

/// Admissible window for the fixed-truncation derivative formula:
/// t in [T, T + H] with 0 <= H <= T^{1/4} and P0 = sqrt(T / 2 pi).
/// H = 0 is accepted as a degenerate (single point) window.
struct Window {
    double T = 0.0;
    double H = 0.0;
    double P0 = 0.0;

    double end() const noexcept { return T + H; }
    bool contains(double t) const noexcept { return t >= T && t <= T + H; }
};

/// Builds a window; WindowTooLong if H > T^{1/4}, RangeViolation if H < 0 or T < 50.
Window make_window(double T, double H);

/// Arbitrary closed interval [T, T + H] with no length restriction.  Long
/// spans are evaluated tile by tile with admissible windows.
struct Span {
    double T = 0.0;
    double H = 0.0;

    double end() const noexcept { return T + H; }
    bool contains(double t) const noexcept { return t >= T && t <= T + H; }
    double P0() const noexcept;
};

/// Consecutive admissible windows covering the span, each as long as its
/// own base allows.  A zero-length span yields one degenerate window.
std::vector<Window> tile(const Span& span);

struct ZPoint {
    double t = 0.0;
    double z = 0.0;          // main sum value
    double zprime_f1 = 0.0;  // derivative with the exact theta'
    double zprime_f2 = 0.0;  // fixed-truncation derivative tied to a window
    int terms_used = 0;      // floor(sqrt(t / 2 pi))
};

/// floor(sqrt(t / 2 pi)); an integral value of the root is included.
int main_sum_terms(double t);

/// 2 sum_{n <= sqrt(t/2pi)} n^{-1/2} cos(theta - t ln n); t >= 50.
double z_main_sum(double t, const EvalConfig& cfg = {});

/// Main sum plus cfg.rs_correction_terms Riemann-Siegel corrections C0..C4.
double riemann_siegel_z(double t, const EvalConfig& cfg);

/// Riemann-Siegel correction function C_k(p), k in [0, 4], p in [0, 1].
double rs_correction(int k, double p);

/// zeta(sigma + it) by Euler-Maclaurin summation with N = max(50, t) terms
/// and Bernoulli tail to order 20.  Requires 0 < sigma <= 1, t >= 0.
std::complex<double> zeta_oracle(double sigma, double t);

/// zeta(sigma + i t_j) for several abscissae sharing the ln n work.
std::vector<std::complex<double>> zeta_oracle(double sigma, std::span<const double> ts);

/// e^{i theta(t)} zeta(1/2 + it) from the oracle.  Its imaginary part is
/// rounding noise.  Requires t >= 10.
std::complex<double> rotated_zeta_oracle(double t);

/// Real part of rotated_zeta_oracle(t).
double z_oracle(double t);
std::vector<double> z_oracle(std::span<const double> ts);

/// -2 sum_{n <= alpha(t)} n^{-1/2} (theta' - ln n) sin(theta - t ln n); t >= 50.
double zprime_formula1(double t, const EvalConfig& cfg = {});

/// -2 sum_{n < P0} n^{-1/2} ln(P0/n) sin(theta - t ln n) for t in the window.
double zprime_formula2(double t, const Window& w, const EvalConfig& cfg = {});

/// Centered difference of z_oracle with one Richardson step (h and h/2).
/// h in [1e-6, 1e-2].
double zprime_fd_oracle(double t, double h = 1e-3);

ZPoint evaluate(double t, const Window& w, const EvalConfig& cfg = {});

/// Fixed-truncation derivative over a long span: each abscissa is evaluated
/// with the admissible tile that contains it.
class TiledDerivative {
public:
    explicit TiledDerivative(const Span& span, EvalConfig cfg = {});

    double operator()(double t) const;
    const Window& window_for(double t) const;
    const std::vector<Window>& windows() const noexcept { return tiles_; }
    const Span& span() const noexcept { return span_; }

private:
    Span span_;
    EvalConfig cfg_;
    std::vector<Window> tiles_;
};

}  // namespace zlab
