#include "zlab/zeval.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "zlab/accumulate.hpp"
#include "zlab/errors.hpp"
#include "zlab/phase.hpp"

namespace zlab {

namespace {

#include "rs_coefficients.inc"

constexpr double kMinMainSumT = 50.0;

// Signed B_2k for k = 1..11.
constexpr std::array<long double, 11> kBernoulli = {
    1.0L / 6.0L,          -1.0L / 30.0L,       1.0L / 42.0L,         -1.0L / 30.0L,
    5.0L / 66.0L,         -691.0L / 2730.0L,   7.0L / 6.0L,          -3617.0L / 510.0L,
    43867.0L / 798.0L,    -174611.0L / 330.0L, 854513.0L / 138.0L,
};
constexpr int kEulerMaclaurinOrder = 10;  // Bernoulli tail through B_20
constexpr double kOracleTarget = 1e-10;

void require_main_sum_domain(double t, const char* what) {
    if (!(t >= kMinMainSumT)) {
        fail(Errc::DomainTooSmall, std::string(what) + " requires t >= 50, got " + std::to_string(t));
    }
}

std::size_t checked_terms(double t) {
    const int n = main_sum_terms(t);
    if (static_cast<std::size_t>(n) >= phase::logs().size()) {
        fail(Errc::DomainExceeded, "main sum length exceeds the ln n table at t = " + std::to_string(t));
    }
    return static_cast<std::size_t>(n);
}

double formula2_unchecked(double t, double P0, const EvalConfig& cfg) {
    const ThetaValue th = theta(t, cfg);
    const auto& table = phase::logs();
    const long double ln_p0 = std::log(static_cast<long double>(P0));
    const auto last = static_cast<std::size_t>(std::ceil(P0)) - 1;  // n < P0
    if (last >= table.size()) fail(Errc::DomainExceeded, "window base too large for the ln n table");
    NeumaierSum acc;
    for (std::size_t n = 1; n <= last; ++n) {
        const double weight = static_cast<double>(ln_p0 - table.ln(n));
        acc.add(table.inv_sqrt(n) * weight * std::sin(phase::reduced(th.theta - t * table.ln(n))));
    }
    return -2.0 * acc.value();
}

std::complex<double> unit_phase(long double angle) {
    const double a = phase::reduced(angle);
    return {std::cos(a), std::sin(a)};
}

void require_oracle_domain(double sigma, double t) {
    if (!(sigma > 0.0 && sigma <= 1.0)) fail(Errc::RangeViolation, "zeta_oracle requires 0 < sigma <= 1");
    if (!(t >= 0.0)) fail(Errc::RangeViolation, "zeta_oracle requires t >= 0");
    if (sigma == 1.0 && t == 0.0) fail(Errc::RangeViolation, "zeta has a pole at s = 1");
}

std::size_t oracle_terms(double t) { return std::max<std::size_t>(50, static_cast<std::size_t>(std::ceil(t))); }

// N^{1-s}/(s-1) + N^{-s}/2 + sum_k B_2k/(2k)! (s)_{2k-1} N^{-s-2k+1}
std::complex<double> euler_maclaurin_tail(double sigma, double t, std::size_t big_n) {
    const std::complex<double> s{sigma, t};
    const long double ln_n = std::log(static_cast<long double>(big_n));
    const double n = static_cast<double>(big_n);
    const std::complex<double> n_pow = std::exp(-sigma * static_cast<double>(ln_n)) * unit_phase(-t * ln_n);

    std::complex<double> tail = n * n_pow / (s - 1.0) + 0.5 * n_pow;
    std::complex<double> rising = s / n;  // (s)_{2k-1} / N^{2k-1}
    long double factorial = 2.0L;         // (2k)!
    for (int k = 1; k <= kEulerMaclaurinOrder; ++k) {
        tail += static_cast<double>(kBernoulli[k - 1] / factorial) * rising * n_pow;
        const double a = 2.0 * k - 1.0;
        rising *= (s + a) * (s + a + 1.0) / (n * n);
        factorial *= (2.0L * k + 1.0L) * (2.0L * k + 2.0L);
    }
    const int next = kEulerMaclaurinOrder + 1;
    const double bound = std::abs(static_cast<double>(kBernoulli[next - 1] / factorial) * rising * n_pow) *
                         std::abs(s + (2.0 * next - 1.0)) / (sigma + 2.0 * next - 1.0);
    if (bound > kOracleTarget) {
        fail(Errc::PrecisionUnreachable, "Euler-Maclaurin remainder bound " + std::to_string(bound) +
                                             " exceeds target at t = " + std::to_string(t));
    }
    return tail;
}

}  // namespace

Window make_window(double T, double H) {
    if (!(T >= kMinMainSumT)) fail(Errc::RangeViolation, "window base must be >= 50");
    if (!(H >= 0.0)) fail(Errc::RangeViolation, "window length must be non-negative");
    if (H > std::pow(T, 0.25)) {
        fail(Errc::WindowTooLong, "H = " + std::to_string(H) + " exceeds T^{1/4} at T = " + std::to_string(T));
    }
    return Window{T, H, std::sqrt(T / (2.0 * static_cast<double>(phase::kPi)))};
}

double Span::P0() const noexcept { return std::sqrt(T / (2.0 * static_cast<double>(phase::kPi))); }

std::vector<Window> tile(const Span& span) {
    if (!(span.H >= 0.0)) fail(Errc::RangeViolation, "span length must be non-negative");
    std::vector<Window> tiles;
    if (span.H == 0.0) {
        tiles.push_back(make_window(span.T, 0.0));
        return tiles;
    }
    const double end = span.end();
    double base = span.T;
    while (base < end) {
        const double room = end - base;
        const double cap = std::pow(base, 0.25);
        if (room <= cap) {
            tiles.push_back(make_window(base, room));
            break;
        }
        tiles.push_back(make_window(base, cap));
        base += cap;
    }
    return tiles;
}

int main_sum_terms(double t) {
    const long double alpha = std::sqrt(static_cast<long double>(t) / phase::kTwoPi);
    return static_cast<int>(std::floor(alpha));
}

double z_main_sum(double t, const EvalConfig& cfg) {
    require_main_sum_domain(t, "z_main_sum");
    const ThetaValue th = theta(t, cfg);
    const std::size_t terms = checked_terms(t);
    const auto& table = phase::logs();
    NeumaierSum acc;
    for (std::size_t n = 1; n <= terms; ++n) {
        acc.add(table.inv_sqrt(n) * std::cos(phase::reduced(th.theta - t * table.ln(n))));
    }
    return 2.0 * acc.value();
}

double rs_correction(int k, double p) {
    if (k < 0 || k > 4) fail(Errc::RangeViolation, "Riemann-Siegel correction index must be in [0, 4]");
    const long double z = static_cast<long double>(p) - 0.5L;
    long double acc = 0.0L;
    for (int i = kRsTaylorLength - 1; i >= 0; --i) acc = acc * z + kRsTaylor[k][i];
    return static_cast<double>(acc);
}

double riemann_siegel_z(double t, const EvalConfig& cfg) {
    const double main = z_main_sum(t, cfg);
    const int corrections = cfg.rs_correction_terms;
    if (corrections == 0) return main;
    const long double alpha = std::sqrt(static_cast<long double>(t) / phase::kTwoPi);
    const long double whole = std::floor(alpha);
    const double p = static_cast<double>(alpha - whole);
    const double inv_alpha = static_cast<double>(1.0L / alpha);
    double series = 0.0;
    double scale = 1.0;
    for (int k = 0; k < corrections; ++k) {
        series += rs_correction(k, p) * scale;
        scale *= inv_alpha;
    }
    const bool odd_count = static_cast<long long>(whole) % 2 == 1;  // (-1)^{N-1} = +1
    const double sign = odd_count ? 1.0 : -1.0;
    return main + sign * std::sqrt(inv_alpha) * series;
}

std::vector<std::complex<double>> zeta_oracle(double sigma, std::span<const double> ts) {
    std::vector<std::size_t> lengths(ts.size());
    std::size_t longest = 0;
    for (std::size_t j = 0; j < ts.size(); ++j) {
        require_oracle_domain(sigma, ts[j]);
        lengths[j] = oracle_terms(ts[j]);
        longest = std::max(longest, lengths[j]);
    }

    std::vector<NeumaierSum> re(ts.size());
    std::vector<NeumaierSum> im(ts.size());
    for (std::size_t n = 1; n < longest; ++n) {
        const long double ln_n = std::log(static_cast<long double>(n));
        const double magnitude =
            sigma == 0.5 ? 1.0 / std::sqrt(static_cast<double>(n)) : std::exp(-sigma * static_cast<double>(ln_n));
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (n >= lengths[j]) continue;
            const double a = phase::reduced(ts[j] * ln_n);
            re[j].add(magnitude * std::cos(a));
            im[j].add(-magnitude * std::sin(a));
        }
    }

    std::vector<std::complex<double>> out(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j) {
        out[j] = std::complex<double>{re[j].value(), im[j].value()} + euler_maclaurin_tail(sigma, ts[j], lengths[j]);
    }
    return out;
}

std::complex<double> zeta_oracle(double sigma, double t) {
    const double ts[] = {t};
    return zeta_oracle(sigma, std::span<const double>(ts))[0];
}

std::complex<double> rotated_zeta_oracle(double t) {
    const ThetaValue th = theta(t);
    return unit_phase(th.theta) * zeta_oracle(0.5, t);
}

double z_oracle(double t) { return rotated_zeta_oracle(t).real(); }

std::vector<double> z_oracle(std::span<const double> ts) {
    std::vector<long double> phases(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j) phases[j] = theta(ts[j]).theta;
    const auto zetas = zeta_oracle(0.5, ts);
    std::vector<double> z(ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j) z[j] = (unit_phase(phases[j]) * zetas[j]).real();
    return z;
}

double zprime_formula1(double t, const EvalConfig& cfg) {
    require_main_sum_domain(t, "zprime_formula1");
    const ThetaValue th = theta(t, cfg);
    const std::size_t terms = checked_terms(t);
    const auto& table = phase::logs();
    NeumaierSum acc;
    for (std::size_t n = 1; n <= terms; ++n) {
        const double weight = th.dtheta - table.ln_d(n);
        acc.add(table.inv_sqrt(n) * weight * std::sin(phase::reduced(th.theta - t * table.ln(n))));
    }
    return -2.0 * acc.value();
}

double zprime_formula2(double t, const Window& w, const EvalConfig& cfg) {
    if (!w.contains(t)) {
        fail(Errc::OutOfWindow, "t = " + std::to_string(t) + " outside [" + std::to_string(w.T) + ", " +
                                    std::to_string(w.end()) + "]");
    }
    if (w.H > std::pow(w.T, 0.25)) fail(Errc::WindowTooLong, "window violates H <= T^{1/4}");
    return formula2_unchecked(t, w.P0, cfg);
}

double zprime_fd_oracle(double t, double h) {
    if (h < 1e-6) fail(Errc::StepTooSmall, "finite-difference step below 1e-6 loses to cancellation");
    if (h > 1e-2) fail(Errc::RangeViolation, "finite-difference step must be <= 1e-2");
    if (t - h < 10.0) fail(Errc::DomainTooSmall, "finite-difference oracle requires t - h >= 10");

    const double ts[] = {t + h, t - h, t + 0.5 * h, t - 0.5 * h};
    const auto zetas = zeta_oracle(0.5, std::span<const double>(ts));
    double z[4];
    for (int j = 0; j < 4; ++j) z[j] = (unit_phase(theta(ts[j]).theta) * zetas[j]).real();

    const double coarse = (z[0] - z[1]) / (2.0 * h);
    const double fine = (z[2] - z[3]) / h;
    return (4.0 * fine - coarse) / 3.0;
}

ZPoint evaluate(double t, const Window& w, const EvalConfig& cfg) {
    ZPoint p;
    p.t = t;
    p.z = z_main_sum(t, cfg);
    p.zprime_f1 = zprime_formula1(t, cfg);
    p.zprime_f2 = zprime_formula2(t, w, cfg);
    p.terms_used = main_sum_terms(t);
    return p;
}

TiledDerivative::TiledDerivative(const Span& span, EvalConfig cfg) : span_(span), cfg_(cfg), tiles_(tile(span)) {}

const Window& TiledDerivative::window_for(double t) const {
    if (!span_.contains(t)) {
        fail(Errc::OutOfWindow, "t = " + std::to_string(t) + " outside the span");
    }
    auto it = std::upper_bound(tiles_.begin(), tiles_.end(), t, [](double x, const Window& w) { return x < w.T; });
    return *std::prev(it);
}

double TiledDerivative::operator()(double t) const { return formula2_unchecked(t, window_for(t).P0, cfg_); }

}  // namespace zlab
