#include "zlab/gram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "zlab/constants.hpp"
#include "zlab/errors.hpp"
#include "zlab/phase.hpp"

namespace zlab {

namespace {

constexpr int kBisectionSteps = 60;
constexpr int kNewtonCap = 50;
constexpr std::size_t kCacheLimit = 4'000'000;

// nu -> abscissa for the default configuration.  Append-only; racing writers
// store identical values.
class GramCache {
public:
    bool find(GramKind kind, long nu, GramPoint& out) const {
        std::shared_lock lock(mutex_);
        const auto& map = maps_[index(kind)];
        const auto it = map.find(nu);
        if (it == map.end()) return false;
        out = it->second;
        return true;
    }
    void store(const GramPoint& p) {
        std::unique_lock lock(mutex_);
        auto& map = maps_[index(p.kind)];
        if (map.size() < kCacheLimit) map.emplace(p.nu, p);
    }
    std::size_t size(GramKind kind) const {
        std::shared_lock lock(mutex_);
        return maps_[index(kind)].size();
    }

private:
    static std::size_t index(GramKind kind) { return kind == GramKind::classical ? 0 : 1; }

    mutable std::shared_mutex mutex_;
    std::unordered_map<long, GramPoint> maps_[2];
};

GramCache& cache() {
    static GramCache instance;
    return instance;
}

bool cacheable(const EvalConfig& cfg) {
    const EvalConfig defaults;
    return cfg.series_terms == defaults.series_terms && cfg.phase_precision == defaults.phase_precision;
}

double invert_theta_main(long double target) {
    const double goal = static_cast<double>(target);
    double lo = 10.0;
    double hi = 20.0;
    while (theta_main(hi) < goal) hi *= 2.0;
    for (int i = 0; i < kBisectionSteps; ++i) {
        const double mid = 0.5 * (lo + hi);
        (theta_main(mid) < goal ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

const char* to_string(GramKind kind) noexcept { return kind == GramKind::classical ? "classical" : "shifted"; }

long double gram_target(long nu, GramKind kind) noexcept {
    const long double base = phase::kPi * static_cast<long double>(nu);
    return kind == GramKind::shifted ? base + phase::kPi / 2.0L : base;
}

GramPoint solve_gram(long nu, GramKind kind, const EvalConfig& cfg) {
    if (nu < 1) fail(Errc::RangeViolation, "Gram index must be >= 1, got " + std::to_string(nu));
    const bool use_cache = cacheable(cfg);
    GramPoint point;
    if (use_cache && cache().find(kind, nu, point)) return point;

    const long double target = gram_target(nu, kind);
    double t = invert_theta_main(target);
    bool converged = false;
    for (int it = 0; it < kNewtonCap; ++it) {
        const ThetaValue th = theta(t, cfg);
        const double step = static_cast<double>((th.theta - target) / th.dtheta);
        t -= step;
        if (std::fabs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * t) {
            converged = true;
            break;
        }
    }
    if (!converged) fail(Errc::NoConvergence, "Newton did not settle for nu = " + std::to_string(nu));

    point = GramPoint{nu, t, kind, static_cast<double>(std::fabs(theta(t, cfg).theta - target))};
    if (use_cache) cache().store(point);
    return point;
}

long first_index_at_or_after(double t, GramKind kind, const EvalConfig& cfg) {
    const long double offset = kind == GramKind::shifted ? phase::kPi / 2.0L : 0.0L;
    long nu = static_cast<long>(std::ceil((theta(t, cfg).theta - offset) / phase::kPi));
    nu = std::max(nu, 1L);
    while (solve_gram(nu, kind, cfg).t < t) ++nu;
    while (nu > 1 && solve_gram(nu - 1, kind, cfg).t >= t) --nu;
    return nu;
}

std::vector<GramPoint> enumerate_span(const Span& span, GramKind kind, const EvalConfig& cfg) {
    std::vector<GramPoint> points;
    const double end = span.end();
    for (long nu = first_index_at_or_after(span.T, kind, cfg);; ++nu) {
        GramPoint p = solve_gram(nu, kind, cfg);
        if (p.t > end) break;
        points.push_back(p);
    }
    return points;
}

std::vector<GramPoint> enumerate_window(const Window& w, GramKind kind, const EvalConfig& cfg) {
    return enumerate_span(Span{w.T, w.H}, kind, cfg);
}

SumReport spacing_report(const std::vector<GramPoint>& points, const Span& window) {
    if (points.size() < 2) fail(Errc::RangeViolation, "spacing needs at least two points");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].kind != points[0].kind) fail(Errc::RangeViolation, "spacing mixes classical and shifted points");
        if (points[i].nu != points[i - 1].nu + 1) fail(Errc::RangeViolation, "spacing needs consecutive indices");
    }
    const double predicted = static_cast<double>(phase::kPi) / std::log(window.P0());
    double worst = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        worst = std::max(worst, std::fabs((points[i].t - points[i - 1].t) - predicted));
    }
    SumReport r;
    r.label = "spacing";
    r.window = window;
    r.count = static_cast<long>(points.size() - 1);
    r.value = predicted + worst;
    r.main_term = predicted;
    r.error_budget = frozen_constants().spacing * std::pow(window.T, -0.75) / std::log(window.T);
    return finalize(r);
}

std::size_t gram_cache_size(GramKind kind) { return cache().size(kind); }

}  // namespace zlab
