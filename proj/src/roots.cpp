#include "zlab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "zlab/errors.hpp"
#include "zlab/phase.hpp"

namespace zlab {

namespace {

constexpr int kBisectionCap = 200;
constexpr double kFlankNoise = 1e-7;
constexpr double kCurvatureNoise = 1e-12;

bool positive(double v) { return v > 0.0; }

double gram_spacing(double t) { return static_cast<double>(phase::kPi) / std::log(std::sqrt(t / static_cast<double>(phase::kTwoPi))); }

void check_density(double density) {
    if (!(density >= 4.0)) {
        fail(Errc::GridTooCoarse, "grid density " + std::to_string(density) + " is below 4 points per Gram spacing");
    }
}

RootRecord refine(const std::function<double(double)>& f, double a, double b, double fa, double tolerance) {
    const bool left_positive = positive(fa);
    for (int i = 0; i < kBisectionCap && b - a > tolerance; ++i) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        if (positive(f(m)) == left_positive) {
            a = m;
        } else {
            b = m;
        }
    }
    RootRecord r;
    r.bracket_lo = a;
    r.bracket_hi = b;
    r.root = 0.5 * (a + b);
    r.kind = left_positive ? ExtremumKind::max_of_Z : ExtremumKind::min_of_Z;
    r.zprime_residual = std::fabs(f(r.root));
    return r;
}

}  // namespace

const char* to_string(ExtremumKind kind) noexcept { return kind == ExtremumKind::max_of_Z ? "max" : "min"; }

const char* to_string(PsiKind kind) noexcept {
    switch (kind) {
        case PsiKind::unit: return "unit";
        case PsiKind::log_log: return "loglog";
        case PsiKind::log_log_log: return "logloglog";
    }
    return "unknown";
}

std::vector<RootRecord> sign_changes(const std::function<double(double)>& f, double lo, double hi, double step,
                                     double tolerance) {
    std::vector<RootRecord> out;
    if (!(hi > lo)) return out;
    const long n = std::max(1L, static_cast<long>(std::ceil((hi - lo) / step)));
    double t_prev = lo;
    double f_prev = f(lo);
    for (long k = 1; k <= n; ++k) {
        const double t = k == n ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n);
        const double v = f(t);
        if (positive(v) != positive(f_prev)) out.push_back(refine(f, t_prev, t, f_prev, tolerance));
        t_prev = t;
        f_prev = v;
    }
    return out;
}

RootScan count_roots(const Window& w, double grid_density, const EvalConfig& cfg) {
    check_density(grid_density);
    RootScan scan;
    if (w.H <= 0.0) return scan;
    const double step = static_cast<double>(phase::kPi) / std::log(w.P0) / grid_density;
    scan.roots = sign_changes([&](double t) { return zprime_formula2(t, w, cfg); }, w.T, w.end(), step, 1e-9);
    scan.count = static_cast<long>(scan.roots.size());
    return scan;
}

RootScan scan_roots(const Span& span, const ScanOptions& options, const EvalConfig& cfg) {
    check_density(options.grid_density);
    RootScan scan;
    if (span.H <= 0.0) return scan;
    const double step = gram_spacing(span.end()) / options.grid_density;
    std::function<double(double)> f;
    switch (options.source) {
        case DerivativeSource::formula2: {
            auto tiled = std::make_shared<TiledDerivative>(span, cfg);
            f = [tiled](double t) { return (*tiled)(t); };
            break;
        }
        case DerivativeSource::formula1:
            f = [cfg](double t) { return zprime_formula1(t, cfg); };
            break;
        case DerivativeSource::oracle:
            f = [](double t) { return zprime_fd_oracle(t); };
            break;
    }
    scan.roots = sign_changes(f, span.T, span.end(), step, options.tolerance);
    scan.count = static_cast<long>(scan.roots.size());
    return scan;
}

std::vector<double> oracle_z_zeros(const Span& span, double grid_density, double tolerance) {
    check_density(grid_density);
    if (span.T < 10.0) fail(Errc::DomainTooSmall, "oracle zeros need t >= 10");
    std::vector<double> zeros;
    if (!(span.H > 0.0)) return zeros;
    const double log_height = std::max(1.0, std::log(span.end() / static_cast<double>(phase::kTwoPi)));
    const double step = static_cast<double>(phase::kTwoPi) / log_height / grid_density;
    const long n = std::max(1L, static_cast<long>(std::ceil(span.H / step)));
    std::vector<double> grid(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        grid[static_cast<std::size_t>(k)] =
            k == n ? span.end() : span.T + span.H * static_cast<double>(k) / static_cast<double>(n);
    }
    const std::vector<double> z = z_oracle(grid);

    // Illinois variant of regula falsi; keeps a sign-changing bracket.
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        if (positive(z[k]) == positive(z[k + 1])) continue;
        double a = grid[k], b = grid[k + 1];
        double fa = z[k], fb = z[k + 1];
        int side = 0;
        for (int i = 0; i < kBisectionCap && b - a > tolerance; ++i) {
            double m = (a * fb - b * fa) / (fb - fa);
            if (!(m > a && m < b)) m = 0.5 * (a + b);
            const double fm = z_oracle(m);
            if (fm == 0.0) {
                a = b = m;
                break;
            }
            if (positive(fm) == positive(fa)) {
                a = m;
                fa = fm;
                if (side == -1) fb *= 0.5;
                side = -1;
            } else {
                b = m;
                fb = fm;
                if (side == 1) fa *= 0.5;
                side = 1;
            }
        }
        zeros.push_back(0.5 * (a + b));
    }
    return zeros;
}

RootRecord classify_extremum(const RootRecord& r, const EvalConfig& cfg) {
    const double t = r.root;
    const double delta = 0.05 * gram_spacing(t);
    const double lo = t - delta;
    const double hi = t + delta;
    const Window w = make_window(lo, hi - lo);
    const double left = zprime_formula2(lo, w, cfg);
    const double right = zprime_formula2(hi, w, cfg);
    if (std::fabs(left) < kFlankNoise || std::fabs(right) < kFlankNoise) {
        fail(Errc::AmbiguousFlank, "Z' flank at noise level near t = " + std::to_string(t));
    }
    if (positive(left) == positive(right)) fail(Errc::AmbiguousFlank, "Z' keeps its sign across t = " + std::to_string(t));
    const ExtremumKind by_flank = positive(left) ? ExtremumKind::max_of_Z : ExtremumKind::min_of_Z;

    const double curvature = z_main_sum(lo, cfg) - 2.0 * z_main_sum(t, cfg) + z_main_sum(hi, cfg);
    if (std::fabs(curvature) < kCurvatureNoise) fail(Errc::AmbiguousFlank, "flat Z near t = " + std::to_string(t));
    const ExtremumKind by_value = curvature < 0.0 ? ExtremumKind::max_of_Z : ExtremumKind::min_of_Z;
    if (by_flank != by_value) fail(Errc::AmbiguousFlank, "flank signs and Z values disagree at t = " + std::to_string(t));

    RootRecord out = r;
    out.kind = by_flank;
    return out;
}

double psi(PsiKind kind, double T) {
    double value = 1.0;
    if (kind == PsiKind::log_log) value = std::log(std::log(T));
    if (kind == PsiKind::log_log_log) value = std::log(std::log(std::log(T)));
    if (!(value > 0.0)) fail(Errc::RangeViolation, "psi(T) must be positive");
    return value;
}

double theorem_interval_length(double T, double delta_exp, PsiKind psi_kind) {
    if (!(delta_exp > 0.0 && delta_exp <= 1.0 / 6.0)) fail(Errc::RangeViolation, "exponent must lie in (0, 1/6]");
    return std::pow(T, delta_exp) * psi(psi_kind, T);
}

RootRecord theorem_interval_check(double T, double delta_exp, PsiKind psi_kind, const EvalConfig& cfg) {
    const double length = theorem_interval_length(T, delta_exp, psi_kind);
    const Span span{T, length};
    for (const RootRecord& r : scan_roots(span, {}, cfg).roots) {
        if (r.root > T && r.root < span.end()) return r;
    }
    fail(Errc::NotFound, "no odd-order root of Z' in (" + std::to_string(T) + ", " + std::to_string(span.end()) + ")");
}

std::vector<IntervalOutcome> theorem_interval_sweep(std::span<const double> Ts, double delta_exp, PsiKind psi_kind,
                                                    FalsificationLog& log, const EvalConfig& cfg) {
    std::vector<IntervalOutcome> out;
    out.reserve(Ts.size());
    for (double T : Ts) {
        IntervalOutcome o;
        o.T = T;
        o.length = theorem_interval_length(T, delta_exp, psi_kind);
        try {
            o.root = theorem_interval_check(T, delta_exp, psi_kind, cfg);
            o.found = true;
        } catch (const Error& e) {
            if (e.code() != Errc::NotFound) throw;
            log.record({T, delta_exp, psi_kind, o.length, e.what()});
        }
        out.push_back(o);
    }
    return out;
}

}  // namespace zlab
